#ifndef MULTIDEG_ORACLE_HPP
#define MULTIDEG_ORACLE_HPP

#include <string>
#include <vector>

#include "multideg/bipoly.hpp"
#include "multideg/engine.hpp"
#include "multideg/graph.hpp"

namespace multideg {

/// Monomial in K[x_1..x_n, y_1..y_n]; variables indexed 0..2n-1 with
/// x_i at index i-1 and y_i at n+i-1.
struct ExpMonomial {
    std::vector<int> e;

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const;
    int total_degree() const;
    /// (sum of x-exponents, sum of y-exponents); n = nvars/2.
    std::pair<int, int> bidegree() const;

    bool divides(const ExpMonomial& m) const;
    ExpMonomial operator*(const ExpMonomial& o) const;
    /// this / o; requires o | this.
    ExpMonomial operator/(const ExpMonomial& o) const;
    friend ExpMonomial lcm(const ExpMonomial& a, const ExpMonomial& b);

    friend bool operator==(const ExpMonomial& a, const ExpMonomial& b) { return a.e == b.e; }
    friend bool operator<(const ExpMonomial& a, const ExpMonomial& b) { return a.e < b.e; }
};

enum class TermOrder {
    Lex,         // x1 > ... > xn > y1 > ... > yn
    DegRevLex,
};

/// a > b in the given order.
bool greater(const ExpMonomial& a, const ExpMonomial& b, TermOrder order);

/// lead - trail with coefficients +1/-1; lead > trail in the active order
/// and both terms share one bidegree.
struct Binomial {
    ExpMonomial lead;
    ExpMonomial trail;
};

/// One generator x_i y_j - x_j y_i per edge {i,j}, i < j.
std::vector<Binomial> binomial_edge_generators(const Graph& g);

/// Reduced Groebner basis. Every element stays a unit binomial; a
/// non-binomial reduction would signal an arithmetic bug and raises
/// std::logic_error.
std::vector<Binomial> buchberger(std::vector<Binomial> gens, TermOrder order);

/// Minimal generators of the initial ideal (the leads of a reduced basis).
std::vector<ExpMonomial> initial_ideal(const std::vector<Binomial>& gb);

/// Numerator of the Z^2-graded Hilbert series of T/I for a monomial ideal I
/// in 2n variables, via the pivot recursion
///   K(I) = K(I + (x)) + t^bideg(x) * K(I : x).
BiPoly k_polynomial(std::vector<ExpMonomial> gens, int n);

/// Multidegree from first principles: lowest-total-degree part of
/// K(T/in(J_G); 1-t1, 1-t2). The extracted degree is checked against the
/// combinatorial codimension. Guard: n <= max_n (default 8).
MultidegreeResult multidegree_via_hilbert(const Graph& g, int max_n = 8,
                                          TermOrder order = TermOrder::Lex);

struct VerifyReport {
    bool equal = false;
    BiPoly combinatorial;
    BiPoly oracle;
    std::string first_difference;  // empty when equal
};

/// Runs both routes and compares them term by term.
VerifyReport verify(const Graph& g, int max_n = 8);

}  // namespace multideg

#endif
