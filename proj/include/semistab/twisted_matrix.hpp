#pragma once

#include <string>
#include <utility>

#include "semistab/cyclotomic.hpp"
#include "semistab/matrix.hpp"
#include "semistab/unity_root.hpp"

namespace semistab {

// A root of unity times an invertible rational matrix: the exact fast path
// for every representation in scope (cyclotomic matrices are only needed
// when flattening direct sums).
//
// The pair (t, B) equals (-t, -B) as a complex matrix, so a canonical
// representative is fixed by keeping the twist exponent in [0, 1/2): the -1
// is folded into the body whenever the exponent lands in the upper half.
// With that rule, distinct (twist, body) pairs denote distinct matrices and
// equality is componentwise. The zero body never occurs here (bodies are
// invertible in representations; spectral helpers may hold singular bodies,
// which is harmless for the canonicalization).
class TwistedMatrix {
public:
    TwistedMatrix(UnityRoot twist, RationalMatrix body)
        : twist_(twist), body_(std::move(body)) {
        if (twist_.exponent() >= Rational(1, 2)) {
            twist_ = twist_ * UnityRoot::minus_one();
            body_ = -body_;
        }
    }
    explicit TwistedMatrix(RationalMatrix body) : TwistedMatrix(UnityRoot::one(), std::move(body)) {}

    static TwistedMatrix identity(int n) {
        return TwistedMatrix(UnityRoot::one(), RationalMatrix::identity(n));
    }

    int n() const { return body_.n(); }
    const UnityRoot& twist() const { return twist_; }
    const RationalMatrix& body() const { return body_; }

    bool is_identity() const { return twist_.is_identity() && body_.is_identity(); }

    TwistedMatrix operator*(const TwistedMatrix& o) const {
        return TwistedMatrix(twist_ * o.twist_, body_ * o.body_);
    }
    TwistedMatrix inverse() const { return TwistedMatrix(twist_.inverse(), body_.inverse()); }
    TwistedMatrix pow(long k) const {
        return TwistedMatrix(twist_.pow(k), body_.pow(k));
    }

    bool operator==(const TwistedMatrix& o) const {
        return twist_ == o.twist_ && body_ == o.body_;
    }
    bool operator!=(const TwistedMatrix& o) const { return !(*this == o); }

    // Entries as elements of Q(zeta_conductor); conductor must be a multiple
    // of the twist order.
    Matrix<CyclotomicNumber> to_cyclotomic(long conductor) const {
        const CyclotomicNumber scale = CyclotomicNumber::from_unity_root(twist_, conductor);
        return body_.map<CyclotomicNumber>(
            [&](const Rational& r) { return scale * CyclotomicNumber(r); });
    }

    std::string str() const {
        if (twist_.is_identity()) return body_.str();
        return twist_.str() + "*" + body_.str();
    }

private:
    UnityRoot twist_;
    RationalMatrix body_;
};

inline TwistedMatrix twisted_mul(const TwistedMatrix& a, const TwistedMatrix& b) { return a * b; }

}  // namespace semistab
