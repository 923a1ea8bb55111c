#include "multideg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace multideg {

bool ExpMonomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int ExpMonomial::total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

std::pair<int, int> ExpMonomial::bidegree() const {
    int n = nvars() / 2, dx = 0, dy = 0;
    for (int k = 0; k < n; ++k) dx += e[k];
    for (int k = n; k < 2 * n; ++k) dy += e[k];
    return {dx, dy};
}

bool ExpMonomial::divides(const ExpMonomial& m) const {
    for (int k = 0; k < nvars(); ++k)
        if (e[k] > m.e[k]) return false;
    return true;
}

ExpMonomial ExpMonomial::operator*(const ExpMonomial& o) const {
    ExpMonomial r = *this;
    for (int k = 0; k < nvars(); ++k) r.e[k] += o.e[k];
    return r;
}

ExpMonomial ExpMonomial::operator/(const ExpMonomial& o) const {
    ExpMonomial r = *this;
    for (int k = 0; k < nvars(); ++k) {
        r.e[k] -= o.e[k];
        if (r.e[k] < 0) throw std::logic_error("ExpMonomial: division not exact");
    }
    return r;
}

ExpMonomial lcm(const ExpMonomial& a, const ExpMonomial& b) {
    ExpMonomial r = a;
    for (int k = 0; k < a.nvars(); ++k) r.e[k] = std::max(a.e[k], b.e[k]);
    return r;
}

bool greater(const ExpMonomial& a, const ExpMonomial& b, TermOrder order) {
    if (order == TermOrder::Lex) return a.e > b.e;
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (int k = a.nvars() - 1; k >= 0; --k)
        if (a.e[k] != b.e[k]) return a.e[k] < b.e[k];
    return false;
}

std::vector<Binomial> binomial_edge_generators(const Graph& g) {
    int n = g.order();
    std::vector<Binomial> gens;
    for (auto [i, j] : g.edges()) {
        ExpMonomial lead{std::vector<int>(2 * n, 0)}, trail{std::vector<int>(2 * n, 0)};
        lead.e[i] = 1;
        lead.e[n + j] = 1;  // x_i y_j
        trail.e[j] = 1;
        trail.e[n + i] = 1;  // x_j y_i
        gens.push_back({lead, trail});
    }
    return gens;
}

namespace {

void check_bihomogeneous(const Binomial& b) {
    if (b.lead.bidegree() != b.trail.bidegree())
        throw std::logic_error("buchberger: non-bihomogeneous binomial produced");
}

// Rewrites m by the basis until no lead divides it.
ExpMonomial normal_form(ExpMonomial m, const std::vector<Binomial>& basis) {
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const Binomial& g : basis) {
            if (g.lead.divides(m)) {
                m = m / g.lead * g.trail;
                reduced = true;
            }
        }
    }
    return m;
}

// Normal form of p - q; nullopt-like empty result encoded by equal monomials.
bool reduce_pair(ExpMonomial& p, ExpMonomial& q, const std::vector<Binomial>& basis,
                 TermOrder order) {
    p = normal_form(std::move(p), basis);
    q = normal_form(std::move(q), basis);
    if (p == q) return false;  // reduced to zero
    if (!greater(p, q, order)) std::swap(p, q);
    return true;
}

}  // namespace

std::vector<Binomial> buchberger(std::vector<Binomial> gens, TermOrder order) {
    std::vector<Binomial> basis;
    for (Binomial& g : gens) {
        check_bihomogeneous(g);
        if (g.lead == g.trail) continue;
        if (!greater(g.lead, g.trail, order)) std::swap(g.lead, g.trail);
        basis.push_back(std::move(g));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Binomial& f = basis[i];
        const Binomial& g = basis[j];
        ExpMonomial l = lcm(f.lead, g.lead);
        if (l == f.lead * g.lead) continue;  // coprime leads: S-pair reduces to zero
        // spoly(f,g) = (l/lead g) trail g - (l/lead f) trail f
        ExpMonomial p = l / g.lead * g.trail;
        ExpMonomial q = l / f.lead * f.trail;
        if (!reduce_pair(p, q, basis, order)) continue;
        Binomial h{std::move(p), std::move(q)};
        check_bihomogeneous(h);
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(h));
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Binomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead.divides(basis[i].lead) &&
                !(basis[j].lead == basis[i].lead && j > i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Reduce trails against the full basis.
    for (Binomial& g : minimal) {
        std::vector<Binomial> others;
        for (const Binomial& h : minimal)
            if (!(h.lead == g.lead)) others.push_back(h);
        g.trail = normal_form(g.trail, others);
        if (g.lead == g.trail || !greater(g.lead, g.trail, order))
            throw std::logic_error("buchberger: trail reduction broke the term order");
        check_bihomogeneous(g);
    }

    std::sort(minimal.begin(), minimal.end(),
              [](const Binomial& a, const Binomial& b) { return a.lead < b.lead; });
    return minimal;
}

std::vector<ExpMonomial> initial_ideal(const std::vector<Binomial>& gb) {
    std::vector<ExpMonomial> leads;
    for (const Binomial& g : gb) leads.push_back(g.lead);
    return leads;
}

namespace {

std::vector<ExpMonomial> minimalize(std::vector<ExpMonomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpMonomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[j] == gens[i] && j > i))
                redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

BiPoly bidegree_term(std::pair<int, int> bideg, Int c = 1) {
    return BiPoly::term(bideg.first, bideg.second, std::move(c));
}

BiPoly k_rec(std::vector<ExpMonomial> gens, int n) {
    if (gens.empty()) return BiPoly::constant(1);
    for (const ExpMonomial& g : gens)
        if (g.is_one()) return BiPoly();  // unit ideal

    // Variable frequencies; all <= 1 means pairwise disjoint supports.
    int nvars = gens[0].nvars();
    std::vector<int> freq(nvars, 0);
    for (const ExpMonomial& g : gens)
        for (int k = 0; k < nvars; ++k)
            if (g.e[k] > 0) ++freq[k];
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    if (freq[pivot] <= 1) {
        BiPoly prod = BiPoly::constant(1);
        for (const ExpMonomial& g : gens)
            prod = prod * (BiPoly::constant(1) - bidegree_term(g.bidegree()));
        return prod;
    }

    std::pair<int, int> pivot_bideg = pivot < n ? std::make_pair(1, 0) : std::make_pair(0, 1);

    // I + (x_pivot): generators avoiding the pivot, times the variable factor.
    std::vector<ExpMonomial> without;
    for (const ExpMonomial& g : gens)
        if (g.e[pivot] == 0) without.push_back(g);
    BiPoly sum_branch = (BiPoly::constant(1) - bidegree_term(pivot_bideg)) * k_rec(std::move(without), n);

    // I : x_pivot.
    std::vector<ExpMonomial> colon = std::move(gens);
    for (ExpMonomial& g : colon)
        if (g.e[pivot] > 0) --g.e[pivot];
    BiPoly colon_branch = bidegree_term(pivot_bideg) * k_rec(minimalize(std::move(colon)), n);

    return sum_branch + colon_branch;
}

}  // namespace

BiPoly k_polynomial(std::vector<ExpMonomial> gens, int n) {
    return k_rec(minimalize(std::move(gens)), n);
}

namespace {

// Codimension of T/J_G from the height formula, summed over components.
int combinatorial_codim(const Graph& g) {
    int codim = 0;
    for (VertexSet block : connected_components(g, g.vertices()).blocks) {
        std::vector<int> verts = block.to_vector();
        Graph sub(static_cast<int>(verts.size()));
        std::vector<int> pos(g.order(), -1);
        for (std::size_t k = 0; k < verts.size(); ++k) pos[verts[k]] = static_cast<int>(k);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (g.has_edge(verts[a], verts[b])) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
        codim += min_sets(sub).height_min;
    }
    return codim;
}

}  // namespace

MultidegreeResult multidegree_via_hilbert(const Graph& g, int max_n, TermOrder order) {
    if (g.order() == 0) throw std::invalid_argument("multidegree_via_hilbert: empty graph rejected");
    if (g.order() > max_n)
        throw std::invalid_argument("multidegree_via_hilbert: order exceeds oracle guard");

    std::vector<Binomial> gb = buchberger(binomial_edge_generators(g), order);
    BiPoly k = k_polynomial(initial_ideal(gb), g.order());
    auto [deg, part] = lowest_total_degree_part(substitute_one_minus(k));

    int codim = combinatorial_codim(g);
    if (deg != codim)
        throw std::logic_error("multidegree_via_hilbert: lowest degree " + std::to_string(deg) +
                               " != combinatorial codimension " + std::to_string(codim));

    MultidegreeResult res;
    res.poly = std::move(part);
    res.codim = deg;
    res.h_min = deg - g.order();
    res.witness_count = 0;  // not tracked on the oracle route
    return res;
}

VerifyReport verify(const Graph& g, int max_n) {
    VerifyReport rep;
    rep.combinatorial = multidegree(g).poly;
    rep.oracle = multidegree_via_hilbert(g, max_n).poly;
    rep.equal = rep.combinatorial == rep.oracle;
    if (!rep.equal) {
        BiPoly diff = rep.combinatorial - rep.oracle;
        const auto& [e, c] = *diff.terms().begin();
        std::ostringstream msg;
        msg << "t1^" << e.first << " t2^" << e.second << ": combinatorial - oracle = " << c.str();
        rep.first_difference = msg.str();
    }
    return rep;
}

}  // namespace multideg
