#include "multideg/bipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace multideg {

BiPoly BiPoly::constant(Int c) { return term(0, 0, std::move(c)); }

BiPoly BiPoly::term(int i, int j, Int c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly p;
    if (c != 0) p.terms_[{i, j}] = std::move(c);
    return p;
}

Int BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly BiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly r = constant(1);
    BiPoly base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        if (k > 1) base = base * base;
    }
    return r;
}

Int BiPoly::eval(const Int& a, const Int& b) const {
    Int r = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (int k = 0; k < e.first; ++k) t *= a;
        for (int k = 0; k < e.second; ++k) t *= b;
        r += t;
    }
    return r;
}

BiPoly h_poly(int n) {
    if (n <= 0) throw std::invalid_argument("h_poly: n must be positive");
    BiPoly p;
    for (int i = 0; i < n; ++i) p.add_term(i, n - 1 - i, 1);
    return p;
}

namespace {

// Pascal's triangle rows 0..n, exact.
std::vector<std::vector<Int>> binomial_rows(int n) {
    std::vector<std::vector<Int>> rows(n + 1);
    for (int i = 0; i <= n; ++i) {
        rows[i].resize(i + 1, 1);
        for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
    }
    return rows;
}

}  // namespace

BiPoly substitute_one_minus(const BiPoly& p) {
    int maxd = 0;
    for (const auto& [e, c] : p.terms()) maxd = std::max({maxd, e.first, e.second});
    auto binom = binomial_rows(maxd);
    BiPoly r;
    for (const auto& [e, c] : p.terms()) {
        // (1-t1)^i (1-t2)^j expanded termwise.
        for (int a = 0; a <= e.first; ++a) {
            Int ca = binom[e.first][a];
            if (a & 1) ca = -ca;
            for (int b = 0; b <= e.second; ++b) {
                Int cb = binom[e.second][b];
                if (b & 1) cb = -cb;
                r.add_term(a, b, c * ca * cb);
            }
        }
    }
    return r;
}

std::pair<int, BiPoly> lowest_total_degree_part(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("lowest_total_degree_part: zero polynomial");
    int mind = -1;
    for (const auto& [e, c] : p.terms()) {
        int d = e.first + e.second;
        if (mind < 0 || d < mind) mind = d;
    }
    BiPoly part;
    for (const auto& [e, c] : p.terms())
        if (e.first + e.second == mind) part.add_term(e.first, e.second, c);
    return {mind, part};
}

bool is_multiplicity_free(const BiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        if (c < 0) throw std::logic_error("is_multiplicity_free: negative coefficient");
        if (c > 1) return false;
    }
    return true;
}

Int leading_coefficient(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("leading_coefficient: zero polynomial");
    return p.terms().begin()->second;  // terms sorted by descending t1-degree
}

bool is_symmetric(const BiPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (p.coeff(e.second, e.first) != c) return false;
    return true;
}

bool is_homogeneous(const BiPoly& p, int* degree) {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        int td = e.first + e.second;
        if (first) {
            d = td;
            first = false;
        } else if (td != d) {
            return false;
        }
    }
    if (degree) *degree = d;
    return true;
}

namespace {

std::string render(const BiPoly& p, const char* v1, const char* v2, bool star) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool hasvars = e.first > 0 || e.second > 0;
        if (a != 1 || !hasvars) {
            out << a.str();
            if (hasvars && star) out << "*";
        }
        auto power = [&](const char* v, int exp, bool lead) {
            if (exp == 0) return;
            if (!lead && star) out << "*";
            out << v;
            if (exp > 1) out << "^" << exp;
        };
        power(v1, e.first, true);
        power(v2, e.second, e.first == 0);
    }
    return out.str();
}

}  // namespace

std::string to_text(const BiPoly& p) { return render(p, "t1", "t2", true); }

std::string to_latex(const BiPoly& p) { return render(p, "t_1", "t_2", false); }

nlohmann::json to_json(const BiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"i", e.first}, {"j", e.second}, {"c", c.str()}});
    return {{"terms", terms}};
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    BiPoly p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("i").get<int>(), t.at("j").get<int>(), Int(t.at("c").get<std::string>()));
    return p;
}

}  // namespace multideg
