#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rankone/errors.hpp"

namespace rankone {

using Complex = std::complex<double>;

/// z^n by binary exponentiation; avoids the log/exp path of std::pow.
Complex intPow(Complex z, std::size_t n);

bool isFinite(Complex z);

/// Cap on the number of tail terms a sequence may carry after
/// canonicalization.  Operator powers multiply tail counts, and a silent
/// truncation would corrupt closed-form sums, so exceeding the cap throws
/// TailCapError.  Process-wide, default 64.
std::size_t tailCap();
void setTailCap(std::size_t cap);

/// One geometric segment: contributes scale * ratio^t at offset t >= 0
/// from the end of the prefix.
struct GeomTail {
    Complex scale;
    Complex ratio;
};

/// A complex sequence made of a finite prefix followed by a finite sum of
/// geometric tails: coordinate n for n >= prefix length L is
/// sum_i scale_i * ratio_i^(n-L).  Always stored canonically: tails sorted
/// by ratio, equal ratios merged, exact-zero scales dropped.  Instances
/// are immutable values.
class GeomTailSeq {
public:
    /// The zero sequence.
    GeomTailSeq() = default;

    GeomTailSeq(std::vector<Complex> prefix, std::vector<GeomTail> tails);

    static GeomTailSeq zero() { return {}; }

    /// Standard basis vector e_n.
    static GeomTailSeq basis(std::size_t n);

    static GeomTailSeq fromPrefix(std::vector<Complex> prefix);

    /// Single geometric tail starting at coordinate `start`:
    /// coordinate(start + t) = scale * ratio^t.
    static GeomTailSeq tail(Complex scale, Complex ratio, std::size_t start = 0);

    const std::vector<Complex>& prefix() const { return prefix_; }
    const std::vector<GeomTail>& tails() const { return tails_; }
    std::size_t prefixLength() const { return prefix_.size(); }

    /// True iff every retained tail has |ratio| < 1.  Norms and inner
    /// products require this; coordinates and shifts do not.
    bool squareSummable() const { return squareSummable_; }

    Complex coordinate(std::size_t n) const;

    /// First m coordinates, evaluated with rolling tail powers.
    std::vector<Complex> firstCoordinates(std::size_t m) const;

    /// Same sequence re-expressed with a prefix of length at least L.
    GeomTailSeq withPrefixLength(std::size_t L) const;

    /// Exact structural zero (empty tail list, all-zero prefix).
    bool isZero() const;

private:
    std::vector<Complex> prefix_;
    std::vector<GeomTail> tails_;
    bool squareSummable_ = true;

    void canonicalize();
};

GeomTailSeq add(const GeomTailSeq& u, const GeomTailSeq& v);
GeomTailSeq scaled(Complex factor, const GeomTailSeq& v);
GeomTailSeq subtract(const GeomTailSeq& u, const GeomTailSeq& v);

/// <u,v> = sum_n u_n conj(v_n) in closed form.  Requires both arguments
/// square-summable; throws DivergentError if a tail-pair ratio product
/// reaches modulus one (impossible for l2 members).
Complex innerProduct(const GeomTailSeq& u, const GeomTailSeq& v);

double normSq(const GeomTailSeq& v);
double norm(const GeomTailSeq& v);
double distance(const GeomTailSeq& u, const GeomTailSeq& v);

/// Forward shift by p: coordinate n of the result is coordinate n-p of v
/// (zero below p).  Exact.
GeomTailSeq shiftRight(const GeomTailSeq& v, std::size_t p);

/// Backward (adjoint) shift by p: coordinate n of the result is
/// coordinate n+p of v.  Exact; geometric tails stay geometric.
GeomTailSeq shiftLeft(const GeomTailSeq& v, std::size_t p);

/// Coefficient sequence of the Szego kernel vector at w: coordinates
/// conj(w)^n.  Requires |w| < 1.
GeomTailSeq szegoKernelVector(Complex w);

/// Coordinatewise product u_n * conj(v_n); tails multiply pairwise, so the
/// result is again eventually geometric (tail count may grow up to the cap).
GeomTailSeq pointwiseMulConj(const GeomTailSeq& u, const GeomTailSeq& v);

/// sum_n s_n of all coordinates, in closed form.  Throws DivergentError
/// when some tail has |ratio| >= 1.
Complex sumAll(const GeomTailSeq& s);

/// A diagonal symbol: finite prefix of entries plus exactly one geometric
/// tail.  A constant diagonal is the tail (value, ratio 1).  Boundedness
/// (|ratio| <= 1) is enforced at construction.
class DiagonalSymbol {
public:
    DiagonalSymbol(std::vector<Complex> prefix, GeomTail tail);

    static DiagonalSymbol constant(Complex value);
    static DiagonalSymbol identity() { return constant(1.0); }

    const std::vector<Complex>& prefix() const { return prefix_; }
    const GeomTail& tail() const { return tail_; }
    std::size_t prefixLength() const { return prefix_.size(); }

    Complex entry(std::size_t n) const;

    DiagonalSymbol conjugated() const;

    /// inf_n |entry(n)|, decided exactly on the representation: the tail
    /// contributes 0 when |ratio| < 1 and |scale| when |ratio| = 1.
    double infModulus() const;

    bool invertibleOnRepresentation() const { return infModulus() > 0.0; }

    /// Structural nonvanishing: no prefix entry, tail scale, or tail ratio
    /// is exactly zero.
    bool allEntriesNonzero() const;

private:
    std::vector<Complex> prefix_;
    GeomTail tail_;
};

/// Coordinatewise action (D v)_n = entry(n) * v_n.
GeomTailSeq pointwiseDiagonal(const DiagonalSymbol& d, const GeomTailSeq& v);

/// Coordinatewise division v_n / entry(n).  Throws SingularDiagonalError
/// on an exact zero entry.  The result may fall outside l2 (its
/// square-summable flag records this).
GeomTailSeq pointwiseDivide(const GeomTailSeq& v, const DiagonalSymbol& d);

/// Structural nonvanishing of every coordinate of v: all prefix entries
/// nonzero and exactly one tail with nonzero scale and ratio.
bool allCoordinatesNonzero(const GeomTailSeq& v);

} // namespace rankone
