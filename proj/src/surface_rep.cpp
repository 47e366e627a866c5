#include "semistab/surface_rep.hpp"

#include "semistab/numtheory.hpp"

namespace semistab {

SurfaceRepresentation::SurfaceRepresentation(int genus_, int punctures_, int rank_,
                                             std::vector<TwistedMatrix> a,
                                             std::vector<TwistedMatrix> b,
                                             std::vector<TwistedMatrix> c)
    : genus(genus_), punctures(punctures_), rank(rank_), A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (genus < 0) throw ShapeMismatch("genus must be >= 0");
    if (punctures < 1) throw ShapeMismatch("need at least one puncture");
    if (rank < 1) throw ShapeMismatch("rank must be >= 1");
    if (static_cast<int>(A.size()) != genus || static_cast<int>(B.size()) != genus)
        throw DimensionMismatch("need exactly g handle matrices in A and B");
    if (static_cast<int>(C.size()) != punctures)
        throw DimensionMismatch("need exactly m puncture matrices in C");
    for (const auto* list : {&A, &B, &C})
        for (const auto& x : *list)
            if (x.n() != rank) throw DimensionMismatch("generator size != rank");
}

DirectSumRepresentation::DirectSumRepresentation(std::vector<SurfaceRepresentation> parts)
    : summands(std::move(parts)) {
    if (summands.empty()) throw ShapeMismatch("direct sum needs at least one summand");
    for (const auto& s : summands)
        if (s.genus != summands.front().genus || s.punctures != summands.front().punctures)
            throw ShapeMismatch("direct sum summands must share (genus, punctures)");
}

int DirectSumRepresentation::total_rank() const {
    int r = 0;
    for (const auto& s : summands) r += s.rank;
    return r;
}

TwistedMatrix relation_defect(const SurfaceRepresentation& rep) {
    TwistedMatrix acc = TwistedMatrix::identity(rep.rank);
    for (int i = 0; i < rep.genus; ++i) {
        const auto& a = rep.A[static_cast<size_t>(i)];
        const auto& b = rep.B[static_cast<size_t>(i)];
        acc = acc * a * b * a.inverse() * b.inverse();
    }
    for (const auto& c : rep.C) acc = acc * c;
    return acc;
}

bool is_valid(const SurfaceRepresentation& rep) { return relation_defect(rep).is_identity(); }

bool is_valid(const DirectSumRepresentation& rep) {
    for (const auto& s : rep.summands)
        if (!is_valid(s)) return false;
    return true;
}

SurfaceRepresentation conjugate(const SurfaceRepresentation& rep, const RationalMatrix& p) {
    if (p.n() != rep.rank) throw DimensionMismatch("conjugator size != rank");
    RationalMatrix pinv(p.n());
    try {
        pinv = p.inverse();
    } catch (const SingularMatrix&) {
        throw SingularConjugator("conjugating matrix is singular");
    }
    auto conj = [&](const TwistedMatrix& x) {
        return TwistedMatrix(x.twist(), p * x.body() * pinv);
    };
    std::vector<TwistedMatrix> a, b, c;
    for (const auto& x : rep.A) a.push_back(conj(x));
    for (const auto& x : rep.B) b.push_back(conj(x));
    for (const auto& x : rep.C) c.push_back(conj(x));
    return SurfaceRepresentation(rep.genus, rep.punctures, rep.rank, std::move(a), std::move(b),
                                 std::move(c));
}

DirectSumRepresentation direct_sum(const SurfaceRepresentation& r1,
                                   const SurfaceRepresentation& r2) {
    if (r1.genus != r2.genus || r1.punctures != r2.punctures)
        throw ShapeMismatch("direct sum requires equal genus and puncture count");
    return DirectSumRepresentation({r1, r2});
}

namespace {

Matrix<CyclotomicNumber> block_diagonal(const std::vector<Matrix<CyclotomicNumber>>& blocks,
                                        int total) {
    Matrix<CyclotomicNumber> out(total);
    int offset = 0;
    for (const auto& blk : blocks) {
        for (int i = 0; i < blk.n(); ++i)
            for (int j = 0; j < blk.n(); ++j) out.at(offset + i, offset + j) = blk.at(i, j);
        offset += blk.n();
    }
    return out;
}

}  // namespace

FlattenedRepresentation flatten(const DirectSumRepresentation& rep) {
    mpz_class conductor(1);
    for (const auto& s : rep.summands)
        for (const auto* list : {&s.A, &s.B, &s.C})
            for (const auto& x : *list) conductor = lcm(conductor, x.twist().order());
    if (!conductor.fits_slong_p()) throw PreconditionFailed("flatten conductor too large");
    const long cond = conductor.get_si();

    FlattenedRepresentation out;
    out.genus = rep.genus();
    out.punctures = rep.punctures();
    out.rank = rep.total_rank();
    out.conductor = cond;
    auto gather = [&](auto member) {
        std::vector<Matrix<CyclotomicNumber>> result;
        const int count = static_cast<int>((rep.summands.front().*member).size());
        for (int idx = 0; idx < count; ++idx) {
            std::vector<Matrix<CyclotomicNumber>> blocks;
            for (const auto& s : rep.summands)
                blocks.push_back((s.*member)[static_cast<size_t>(idx)].to_cyclotomic(cond));
            result.push_back(block_diagonal(blocks, out.rank));
        }
        return result;
    };
    out.A = gather(&SurfaceRepresentation::A);
    out.B = gather(&SurfaceRepresentation::B);
    out.C = gather(&SurfaceRepresentation::C);
    return out;
}

Matrix<CyclotomicNumber> flat_relation_defect(const FlattenedRepresentation& rep) {
    auto acc = Matrix<CyclotomicNumber>::identity(rep.rank);
    for (int i = 0; i < rep.genus; ++i) {
        const auto& a = rep.A[static_cast<size_t>(i)];
        const auto& b = rep.B[static_cast<size_t>(i)];
        acc = acc * a * b * a.inverse() * b.inverse();
    }
    for (const auto& c : rep.C) acc = acc * c;
    return acc;
}

bool is_valid(const FlattenedRepresentation& rep) {
    return flat_relation_defect(rep).is_identity();
}

}  // namespace semistab
