#ifndef MULTIDEG_BIPOLY_HPP
#define MULTIDEG_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

namespace multideg {

using Int = boost::multiprecision::cpp_int;

/// Sparse bivariate polynomial in t1, t2 with exact integer coefficients.
/// Terms are kept in display order: descending t1-degree, then ascending
/// t2-degree. Zero coefficients are never stored.
class BiPoly {
public:
    struct TermCmp {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        }
    };
    using TermMap = std::map<std::pair<int, int>, Int, TermCmp>;

    BiPoly() = default;

    static BiPoly constant(Int c);
    static BiPoly term(int i, int j, Int c);
    static BiPoly t1() { return term(1, 0, 1); }
    static BiPoly t2() { return term(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Int coeff(int i, int j) const;
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c to the coefficient of t1^i t2^j, erasing it if it becomes zero.
    void add_term(int i, int j, const Int& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly pow(int k) const;

    Int eval(const Int& a, const Int& b) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// (t1^n - t2^n)/(t1 - t2) = sum_{i+j=n-1} t1^i t2^j, the multidegree of
/// the binomial edge ideal of the complete graph K_n.
BiPoly h_poly(int n);

/// P(1-t1, 1-t2), expanded exactly. An involution.
BiPoly substitute_one_minus(const BiPoly& p);

/// Minimum total degree present and the homogeneous part at that degree.
std::pair<int, BiPoly> lowest_total_degree_part(const BiPoly& p);

/// True iff every coefficient is 0 or 1. Negative coefficients indicate a
/// corrupted multidegree and raise std::logic_error.
bool is_multiplicity_free(const BiPoly& p);

/// Coefficient of the maximal-t1-degree term.
Int leading_coefficient(const BiPoly& p);

/// coeff(i,j) == coeff(j,i) for all terms.
bool is_symmetric(const BiPoly& p);

/// True iff all terms share one total degree; the degree is reported via
/// `degree` when nonnull (0 for the zero polynomial).
bool is_homogeneous(const BiPoly& p, int* degree = nullptr);

std::string to_text(const BiPoly& p);
std::string to_latex(const BiPoly& p);
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace multideg

#endif
