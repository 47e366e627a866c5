#include "semistab/reducibility.hpp"

#include <algorithm>
#include <deque>

namespace semistab {

int VectorSpan::reduce(std::vector<Rational>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t p = static_cast<size_t>(pivots_[r]);
        if (!v[p].is_zero()) {
            const Rational f = v[p];
            for (size_t c = p; c < v.size(); ++c) v[c] -= f * rows_[r][c];
        }
    }
    for (size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) return static_cast<int>(c);
    return -1;
}

bool VectorSpan::insert(std::vector<Rational> v) {
    if (static_cast<int>(v.size()) != dim_) throw DimensionMismatch("span vector size mismatch");
    const int pivot = reduce(v);
    if (pivot < 0) return false;
    const Rational inv = v[static_cast<size_t>(pivot)].inverse();
    for (size_t c = static_cast<size_t>(pivot); c < v.size(); ++c) v[c] *= inv;
    const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool VectorSpan::contains(std::vector<Rational> v) const { return reduce(v) < 0; }

namespace {

std::vector<Rational> vectorize(const RationalMatrix& m) {
    return m.entries();
}

}  // namespace

int algebra_dimension(const std::vector<RationalMatrix>& generators) {
    if (generators.empty()) return 1;
    const int n = generators.front().n();
    for (const auto& g : generators)
        if (g.n() != n) throw DimensionMismatch("generators of unequal size");

    VectorSpan span(n * n);
    std::deque<RationalMatrix> queue;
    span.insert(vectorize(RationalMatrix::identity(n)));
    queue.push_back(RationalMatrix::identity(n));

    // Every word in the generators is reached by left multiplication, so the
    // fixed point of this closure spans the whole unital algebra.
    long products = 0;
    const long cap = static_cast<long>(n) * n * n * n * static_cast<long>(generators.size()) + 16;
    while (!queue.empty()) {
        const RationalMatrix m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            if (++products > cap) throw Error("internal: algebra closure failed to stabilize");
            RationalMatrix p = g * m;
            if (span.insert(vectorize(p))) queue.push_back(std::move(p));
        }
    }
    return span.dim();
}

bool tuple_irreducible(const std::vector<RationalMatrix>& generators) {
    if (generators.empty()) return false;
    const int n = generators.front().n();
    if (n == 1) return true;
    return algebra_dimension(generators) == n * n;
}

namespace {

std::vector<RationalMatrix> generator_bodies(const SurfaceRepresentation& rep) {
    std::vector<RationalMatrix> gens;
    for (const auto* list : {&rep.A, &rep.B, &rep.C})
        for (const auto& x : *list) gens.push_back(x.body());
    return gens;
}

}  // namespace

bool is_irreducible(const SurfaceRepresentation& rep) {
    if (rep.rank == 1) return true;
    return tuple_irreducible(generator_bodies(rep));
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.n()) throw DimensionMismatch("mat_vec size mismatch");
    std::vector<Rational> out(v.size(), Rational(0));
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

std::optional<std::vector<std::vector<Rational>>> invariant_subspace_witness(
    const SurfaceRepresentation& rep) {
    const int n = rep.rank;
    if (n == 1) return std::nullopt;
    const auto gens = generator_bodies(rep);

    auto closure_of = [&](const std::vector<Rational>& seed) {
        VectorSpan span(n);
        std::deque<std::vector<Rational>> queue;
        if (span.insert(seed)) queue.push_back(seed);
        while (!queue.empty() && span.dim() < n) {
            const auto v = std::move(queue.front());
            queue.pop_front();
            for (const auto& g : gens) {
                auto w = mat_vec(g, v);
                if (span.insert(w)) queue.push_back(std::move(w));
            }
        }
        return span;
    };

    for (const auto& g : gens) {
        for (const auto& [q, mult] : polynomial_rational_roots(char_poly(g))) {
            RationalMatrix shifted = g;
            for (int i = 0; i < n; ++i) shifted.at(i, i) -= q;
            for (const auto& v : kernel_basis(shifted)) {
                const VectorSpan span = closure_of(v);
                if (span.dim() > 0 && span.dim() < n) return span.basis();
            }
        }
    }
    return std::nullopt;
}

}  // namespace semistab
