#include "multideg/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "multideg/engine.hpp"

namespace multideg {

namespace {

CensusRecord make_record(const std::string& g6) {
    Graph g = parse_graph6(g6);
    MultidegreeResult md = multidegree(g);
    CensusRecord rec;
    rec.graph6 = g6;
    rec.n = g.order();
    rec.codim = md.codim;
    rec.multiplicity_free = is_multiplicity_free(md.poly);
    rec.leading_coeff = leading_coefficient(md.poly);
    rec.multidegree = std::move(md.poly);
    return rec;
}

std::vector<CensusRecord> compute_all(std::vector<std::string> keys, int workers) {
    std::sort(keys.begin(), keys.end());
    std::vector<CensusRecord> records(keys.size());
    workers = std::max(1, workers);
    if (workers == 1) {
        for (std::size_t k = 0; k < keys.size(); ++k) records[k] = make_record(keys[k]);
        return records;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= keys.size()) return;
            records[k] = make_record(keys[k]);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    return records;
}

}  // namespace

std::vector<CensusRecord> census_builtin(int n, int workers) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("census: built-in enumeration covers n <= 7; use --file for larger orders");
    return compute_all(connected_classes_g6(n), workers);
}

std::vector<CensusRecord> census_from_file(const std::string& path, int workers) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("census: cannot open " + path);
    std::vector<std::string> keys;
    std::string line;
    int order = -1;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("census: " + path + ":" + std::to_string(lineno) + ": " +
                                        e.what());
        }
        if (order < 0) order = g.order();
        if (g.order() != order)
            throw std::invalid_argument("census: " + path + ":" + std::to_string(lineno) +
                                        ": mixed graph orders in file");
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        keys.push_back(line);
    }
    if (keys.empty()) throw std::invalid_argument("census: no graphs in " + path);
    return compute_all(std::move(keys), workers);
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: empty record list");
    CensusSummary s;
    s.n = records.front().n;
    for (const CensusRecord& r : records) {
        if (r.n != s.n) throw std::invalid_argument("summarize: records must share one order");
        ++s.total;
        if (r.multiplicity_free) ++s.multiplicity_free;
        if (r.leading_coeff == 1)
            ++s.leading_1;
        else if (r.leading_coeff == 2)
            ++s.leading_2;
        else if (r.leading_coeff == 3)
            ++s.leading_3;
        else
            ++s.leading_other[r.leading_coeff.str()];
    }
    return s;
}

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
    out << "graph6,n,codim,multiplicity_free,leading_coeff,multidegree\n";
    for (const CensusRecord& r : records)
        out << r.graph6 << ',' << r.n << ',' << r.codim << ',' << (r.multiplicity_free ? 1 : 0)
            << ',' << r.leading_coeff.str() << ',' << to_latex(r.multidegree) << '\n';
}

nlohmann::json summary_to_json(const CensusSummary& s) {
    nlohmann::json other = nlohmann::json::object();
    for (const auto& [coeff, count] : s.leading_other) other[coeff] = count;
    return {{"n", s.n},
            {"total", s.total},
            {"multiplicity_free", s.multiplicity_free},
            {"leading_1", s.leading_1},
            {"leading_2", s.leading_2},
            {"leading_3", s.leading_3},
            {"leading_other", other}};
}

}  // namespace multideg
