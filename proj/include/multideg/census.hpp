#ifndef MULTIDEG_CENSUS_HPP
#define MULTIDEG_CENSUS_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "multideg/bipoly.hpp"
#include "multideg/graph.hpp"

namespace multideg {

struct CensusRecord {
    std::string graph6;
    int n = 0;
    int codim = 0;
    BiPoly multidegree;
    bool multiplicity_free = false;
    Int leading_coeff;
};

struct CensusSummary {
    int n = 0;
    std::size_t total = 0;
    std::size_t multiplicity_free = 0;
    std::size_t leading_1 = 0;
    std::size_t leading_2 = 0;
    std::size_t leading_3 = 0;
    std::map<std::string, std::size_t> leading_other;  // coefficient >= 4, as decimal string
};

/// Built-in census over all connected graphs of order n (n <= 7). Records
/// are ordered lexicographically by graph6 string regardless of workers.
std::vector<CensusRecord> census_builtin(int n, int workers = 1);

/// Census over a graph6 file, one graph per line, all of one order.
/// Malformed lines and mixed orders are reported with their line number.
std::vector<CensusRecord> census_from_file(const std::string& path, int workers = 1);

CensusSummary summarize(const std::vector<CensusRecord>& records);

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records);
nlohmann::json summary_to_json(const CensusSummary& s);

}  // namespace multideg

#endif
