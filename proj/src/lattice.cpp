#include "semistab/lattice.hpp"

#include <algorithm>

#include "semistab/errors.hpp"

namespace semistab {

LatticeLine::LatticeLine(std::vector<UnityRoot> lambda, std::vector<Rational> beta)
    : lambda_(std::move(lambda)), beta_(std::move(beta)) {
    if (lambda_.empty()) throw ShapeMismatch("lattice line needs at least one puncture");
    if (lambda_.size() != beta_.size())
        throw DimensionMismatch("lambda/beta length mismatch");
    Rational sum(0);
    for (const auto& b : beta_) sum += b;
    degree_ = -sum;
    check_invariants();
}

void LatticeLine::check_invariants() const {
    Rational sum(0);
    for (size_t p = 0; p < beta_.size(); ++p) {
        // exponent() is the Deligne representative of lambda(p)
        if (beta_[p].mod1() != lambda_[p].exponent())
            throw PreconditionFailed("beta(p) is not congruent to the Deligne residue mod 1");
        sum += beta_[p];
    }
    if (degree_ != -sum) throw Error("internal: Fuchs identity violated");
}

LatticeLine LatticeLine::lowered_at(int p) const {
    if (p < 0 || p >= punctures()) throw PreconditionFailed("puncture index out of range");
    LatticeLine out = *this;
    out.beta_[static_cast<size_t>(p)] -= Rational(1);
    out.degree_ += Rational(1);
    out.check_invariants();
    return out;
}

LatticeLine deligne_line(const std::vector<UnityRoot>& lambdas) {
    UnityRoot product;
    for (const auto& l : lambdas) product = product * l;
    if (!product.is_identity())
        throw NonUnitProduct("product of local eigenvalues must be 1 on a rank-1 line");
    std::vector<Rational> beta;
    for (const auto& l : lambdas) beta.push_back(l.exponent());
    return LatticeLine(lambdas, std::move(beta));
}

LatticePair::LatticePair(LatticeLine sub_, LatticeLine quot_)
    : sub(std::move(sub_)), quot(std::move(quot_)) {
    if (sub.punctures() != quot.punctures())
        throw ShapeMismatch("sub and quotient lines must share the puncture set");
}

LatticePair gabber_move(const LatticePair& pair, int p, Side side) {
    if (p < 0 || p >= pair.sub.punctures())
        throw PreconditionFailed("puncture index out of range");
    if (pair.sub.lambda()[static_cast<size_t>(p)] == pair.quot.lambda()[static_cast<size_t>(p)])
        throw NoEigenspaceSplit("residue eigenspaces coincide at puncture " +
                                std::to_string(p + 1));
    if (side == Side::Sub) return LatticePair(pair.sub.lowered_at(p), pair.quot);
    return LatticePair(pair.sub, pair.quot.lowered_at(p));
}

std::pair<LatticePair, std::vector<GabberMove>> balance(const LatticePair& pair) {
    if (!pair.sub.degree().is_integer() || !pair.quot.degree().is_integer())
        throw PreconditionFailed("balance requires integer degrees");
    int split = -1;
    for (int p = 0; p < pair.sub.punctures(); ++p) {
        if (pair.sub.lambda()[static_cast<size_t>(p)] != pair.quot.lambda()[static_cast<size_t>(p)]) {
            split = p;
            break;
        }
    }
    LatticePair current = pair;
    std::vector<GabberMove> trace;
    while (current.sub.degree() != current.quot.degree()) {
        if (split < 0)
            throw NoSplitPoint("degrees differ but no puncture separates the eigenvalues");
        const Side side =
            current.sub.degree() < current.quot.degree() ? Side::Sub : Side::Quot;
        current = gabber_move(current, split, side);
        trace.push_back({split, side});
    }
    return {current, trace};
}

bool flag_residue_check(const std::vector<Rational>& full, const std::vector<Rational>& sub) {
    for (size_t i = 0; i < full.size(); ++i)
        for (size_t j = i + 1; j < full.size(); ++j)
            if (!(full[i] - full[j]).is_integer())
                throw NonIntegralDifference("residues " + full[i].str() + " and " +
                                            full[j].str() + " do not differ by an integer");
    if (sub.size() > full.size()) return false;
    std::vector<Rational> sorted = full;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Rational> bottom(sorted.begin(), sorted.begin() + static_cast<long>(sub.size()));
    std::vector<Rational> sub_sorted = sub;
    std::sort(sub_sorted.begin(), sub_sorted.end());
    return bottom == sub_sorted;
}

std::string to_string(Side side) { return side == Side::Sub ? "sub" : "quot"; }

}  // namespace semistab
