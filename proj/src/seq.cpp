#include "rankone/seq.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace rankone {

namespace {

std::atomic<std::size_t> g_tailCap{64};

void requireFinite(Complex z, const char* what) {
    if (!isFinite(z)) {
        throw Error(std::string(what) + ": non-finite value");
    }
}

} // namespace

Complex intPow(Complex z, std::size_t n) {
    Complex acc = 1.0;
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

bool isFinite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::size_t tailCap() { return g_tailCap.load(); }

void setTailCap(std::size_t cap) { g_tailCap.store(cap); }

GeomTailSeq::GeomTailSeq(std::vector<Complex> prefix, std::vector<GeomTail> tails)
    : prefix_(std::move(prefix)), tails_(std::move(tails)) {
    for (Complex z : prefix_) requireFinite(z, "prefix entry");
    for (const GeomTail& t : tails_) {
        requireFinite(t.scale, "tail scale");
        requireFinite(t.ratio, "tail ratio");
    }
    canonicalize();
}

GeomTailSeq GeomTailSeq::basis(std::size_t n) {
    std::vector<Complex> p(n + 1, Complex(0.0));
    p[n] = 1.0;
    return GeomTailSeq(std::move(p), {});
}

GeomTailSeq GeomTailSeq::fromPrefix(std::vector<Complex> prefix) {
    return GeomTailSeq(std::move(prefix), {});
}

GeomTailSeq GeomTailSeq::tail(Complex scale, Complex ratio, std::size_t start) {
    return GeomTailSeq(std::vector<Complex>(start, Complex(0.0)), {GeomTail{scale, ratio}});
}

void GeomTailSeq::canonicalize() {
    // Merge equal ratios, drop exact-zero scales.  Sorting by ratio makes
    // the stored form independent of construction order.
    std::sort(tails_.begin(), tails_.end(), [](const GeomTail& a, const GeomTail& b) {
        if (a.ratio.real() != b.ratio.real()) return a.ratio.real() < b.ratio.real();
        return a.ratio.imag() < b.ratio.imag();
    });
    std::vector<GeomTail> merged;
    merged.reserve(tails_.size());
    for (const GeomTail& t : tails_) {
        if (!merged.empty() && merged.back().ratio == t.ratio) {
            merged.back().scale += t.scale;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const GeomTail& t) { return t.scale == Complex(0.0); }),
                 merged.end());
    if (merged.size() > tailCap()) {
        throw TailCapError("tail count " + std::to_string(merged.size()) +
                           " exceeds cap " + std::to_string(tailCap()));
    }
    tails_ = std::move(merged);
    squareSummable_ = true;
    for (const GeomTail& t : tails_) {
        if (std::norm(t.ratio) >= 1.0) squareSummable_ = false;
    }
}

Complex GeomTailSeq::coordinate(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    const std::size_t t = n - prefix_.size();
    Complex acc = 0.0;
    for (const GeomTail& g : tails_) acc += g.scale * intPow(g.ratio, t);
    return acc;
}

std::vector<Complex> GeomTailSeq::firstCoordinates(std::size_t m) const {
    std::vector<Complex> out(m, Complex(0.0));
    const std::size_t L = std::min<std::size_t>(m, prefix_.size());
    for (std::size_t n = 0; n < L; ++n) out[n] = prefix_[n];
    if (prefix_.size() < m) {
        std::vector<Complex> cur(tails_.size());
        for (std::size_t i = 0; i < tails_.size(); ++i) cur[i] = tails_[i].scale;
        for (std::size_t n = prefix_.size(); n < m; ++n) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < tails_.size(); ++i) {
                acc += cur[i];
                cur[i] *= tails_[i].ratio;
            }
            out[n] = acc;
        }
    }
    return out;
}

GeomTailSeq GeomTailSeq::withPrefixLength(std::size_t L) const {
    if (L <= prefix_.size()) return *this;
    std::vector<Complex> p = prefix_;
    p.reserve(L);
    std::vector<GeomTail> t = tails_;
    // Peel tail values into the prefix one coordinate at a time; each step
    // advances every tail by one power of its ratio.
    for (std::size_t n = prefix_.size(); n < L; ++n) {
        Complex value = 0.0;
        for (GeomTail& g : t) {
            value += g.scale;
            g.scale *= g.ratio;
        }
        p.push_back(value);
    }
    return GeomTailSeq(std::move(p), std::move(t));
}

bool GeomTailSeq::isZero() const {
    if (!tails_.empty()) return false;
    for (Complex z : prefix_) {
        if (z != Complex(0.0)) return false;
    }
    return true;
}

GeomTailSeq add(const GeomTailSeq& u, const GeomTailSeq& v) {
    const std::size_t L = std::max(u.prefixLength(), v.prefixLength());
    const GeomTailSeq a = u.withPrefixLength(L);
    const GeomTailSeq b = v.withPrefixLength(L);
    std::vector<Complex> p(L, Complex(0.0));
    for (std::size_t n = 0; n < L; ++n) p[n] = a.prefix()[n] + b.prefix()[n];
    std::vector<GeomTail> t = a.tails();
    t.insert(t.end(), b.tails().begin(), b.tails().end());
    return GeomTailSeq(std::move(p), std::move(t));
}

GeomTailSeq scaled(Complex factor, const GeomTailSeq& v) {
    std::vector<Complex> p = v.prefix();
    for (Complex& z : p) z *= factor;
    std::vector<GeomTail> t = v.tails();
    for (GeomTail& g : t) g.scale *= factor;
    return GeomTailSeq(std::move(p), std::move(t));
}

GeomTailSeq subtract(const GeomTailSeq& u, const GeomTailSeq& v) {
    return add(u, scaled(-1.0, v));
}

namespace {

// Shared core of innerProduct and the unchecked dot used by the diagonal
// module.  After aligning both sequences to a common prefix length, the
// cross terms split into a finite prefix sum and one closed-form geometric
// sum per tail pair:
//   sum_t (r q^t)(conj(r' q'^t)) = r conj(r') / (1 - q conj(q')).
Complex dotClosedForm(const GeomTailSeq& u, const GeomTailSeq& v) {
    const std::size_t L = std::max(u.prefixLength(), v.prefixLength());
    const GeomTailSeq a = u.withPrefixLength(L);
    const GeomTailSeq b = v.withPrefixLength(L);
    Complex acc = 0.0;
    for (std::size_t n = 0; n < L; ++n) acc += a.prefix()[n] * std::conj(b.prefix()[n]);
    for (const GeomTail& ta : a.tails()) {
        for (const GeomTail& tb : b.tails()) {
            const Complex z = ta.ratio * std::conj(tb.ratio);
            if (std::norm(z) >= 1.0) {
                throw DivergentError("tail-pair ratio product has modulus >= 1");
            }
            acc += ta.scale * std::conj(tb.scale) / (Complex(1.0) - z);
        }
    }
    return acc;
}

} // namespace

Complex innerProduct(const GeomTailSeq& u, const GeomTailSeq& v) {
    if (!u.squareSummable() || !v.squareSummable()) {
        throw NotSquareSummableError("inner product requires both sequences in l2");
    }
    return dotClosedForm(u, v);
}

double normSq(const GeomTailSeq& v) {
    const Complex z = innerProduct(v, v);
    return z.real() < 0.0 ? 0.0 : z.real();
}

double norm(const GeomTailSeq& v) { return std::sqrt(normSq(v)); }

double distance(const GeomTailSeq& u, const GeomTailSeq& v) {
    return norm(subtract(u, v));
}

GeomTailSeq shiftRight(const GeomTailSeq& v, std::size_t p) {
    std::vector<Complex> prefix(p, Complex(0.0));
    prefix.insert(prefix.end(), v.prefix().begin(), v.prefix().end());
    return GeomTailSeq(std::move(prefix), v.tails());
}

GeomTailSeq shiftLeft(const GeomTailSeq& v, std::size_t p) {
    if (p <= v.prefixLength()) {
        std::vector<Complex> prefix(v.prefix().begin() + static_cast<std::ptrdiff_t>(p),
                                    v.prefix().end());
        return GeomTailSeq(std::move(prefix), v.tails());
    }
    // The cut lands inside the tail region: re-anchor each tail at offset
    // p - L, which rescales the tail by ratio^(p-L).
    const std::size_t skip = p - v.prefixLength();
    std::vector<GeomTail> t = v.tails();
    for (GeomTail& g : t) g.scale *= intPow(g.ratio, skip);
    return GeomTailSeq({}, std::move(t));
}

GeomTailSeq szegoKernelVector(Complex w) {
    if (std::norm(w) >= 1.0) {
        throw OutOfDiscError("kernel parameter must satisfy |w| < 1");
    }
    return GeomTailSeq::tail(1.0, std::conj(w));
}

GeomTailSeq pointwiseMulConj(const GeomTailSeq& u, const GeomTailSeq& v) {
    const std::size_t L = std::max(u.prefixLength(), v.prefixLength());
    const GeomTailSeq a = u.withPrefixLength(L);
    const GeomTailSeq b = v.withPrefixLength(L);
    std::vector<Complex> p(L, Complex(0.0));
    for (std::size_t n = 0; n < L; ++n) p[n] = a.prefix()[n] * std::conj(b.prefix()[n]);
    std::vector<GeomTail> t;
    t.reserve(a.tails().size() * b.tails().size());
    for (const GeomTail& ta : a.tails()) {
        for (const GeomTail& tb : b.tails()) {
            t.push_back(GeomTail{ta.scale * std::conj(tb.scale), ta.ratio * std::conj(tb.ratio)});
        }
    }
    return GeomTailSeq(std::move(p), std::move(t));
}

Complex sumAll(const GeomTailSeq& s) {
    Complex acc = 0.0;
    for (Complex z : s.prefix()) acc += z;
    for (const GeomTail& g : s.tails()) {
        if (std::norm(g.ratio) >= 1.0) {
            throw DivergentError("series tail has |ratio| >= 1");
        }
        acc += g.scale / (Complex(1.0) - g.ratio);
    }
    return acc;
}

DiagonalSymbol::DiagonalSymbol(std::vector<Complex> prefix, GeomTail tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    for (Complex z : prefix_) requireFinite(z, "diagonal entry");
    requireFinite(tail_.scale, "diagonal tail scale");
    requireFinite(tail_.ratio, "diagonal tail ratio");
    if (std::norm(tail_.ratio) > 1.0) {
        throw UnboundedDiagonalError("diagonal tail ratio has modulus > 1");
    }
}

DiagonalSymbol DiagonalSymbol::constant(Complex value) {
    return DiagonalSymbol({}, GeomTail{value, 1.0});
}

Complex DiagonalSymbol::entry(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return tail_.scale * intPow(tail_.ratio, n - prefix_.size());
}

DiagonalSymbol DiagonalSymbol::conjugated() const {
    std::vector<Complex> p = prefix_;
    for (Complex& z : p) z = std::conj(z);
    return DiagonalSymbol(std::move(p), GeomTail{std::conj(tail_.scale), std::conj(tail_.ratio)});
}

double DiagonalSymbol::infModulus() const {
    // |scale * ratio^t| tends to 0 when |ratio| < 1 and stays at |scale|
    // when |ratio| = 1.
    double inf = std::norm(tail_.ratio) < 1.0 ? 0.0 : std::abs(tail_.scale);
    for (Complex z : prefix_) inf = std::min(inf, std::abs(z));
    return inf;
}

bool DiagonalSymbol::allEntriesNonzero() const {
    for (Complex z : prefix_) {
        if (z == Complex(0.0)) return false;
    }
    return tail_.scale != Complex(0.0) && tail_.ratio != Complex(0.0);
}

GeomTailSeq pointwiseDiagonal(const DiagonalSymbol& d, const GeomTailSeq& v) {
    const std::size_t L = std::max(v.prefixLength(), d.prefixLength());
    const GeomTailSeq a = v.withPrefixLength(L);
    std::vector<Complex> p(L, Complex(0.0));
    for (std::size_t n = 0; n < L; ++n) p[n] = d.entry(n) * a.prefix()[n];
    // Past the common prefix the diagonal entry at offset t is
    // (scale * ratio^(L-Ld)) * ratio^t, so tails multiply term by term.
    const Complex head = d.tail().scale * intPow(d.tail().ratio, L - d.prefixLength());
    std::vector<GeomTail> t;
    t.reserve(a.tails().size());
    for (const GeomTail& g : a.tails()) {
        t.push_back(GeomTail{g.scale * head, g.ratio * d.tail().ratio});
    }
    return GeomTailSeq(std::move(p), std::move(t));
}

GeomTailSeq pointwiseDivide(const GeomTailSeq& v, const DiagonalSymbol& d) {
    if (d.tail().scale == Complex(0.0) || d.tail().ratio == Complex(0.0)) {
        throw SingularDiagonalError("diagonal tail vanishes");
    }
    const std::size_t L = std::max(v.prefixLength(), d.prefixLength());
    const GeomTailSeq a = v.withPrefixLength(L);
    std::vector<Complex> p(L, Complex(0.0));
    for (std::size_t n = 0; n < L; ++n) {
        const Complex e = d.entry(n);
        if (e == Complex(0.0)) {
            throw SingularDiagonalError("diagonal entry " + std::to_string(n) + " is zero");
        }
        p[n] = a.prefix()[n] / e;
    }
    const Complex head = d.tail().scale * intPow(d.tail().ratio, L - d.prefixLength());
    std::vector<GeomTail> t;
    t.reserve(a.tails().size());
    for (const GeomTail& g : a.tails()) {
        t.push_back(GeomTail{g.scale / head, g.ratio / d.tail().ratio});
    }
    return GeomTailSeq(std::move(p), std::move(t));
}

bool allCoordinatesNonzero(const GeomTailSeq& v) {
    for (Complex z : v.prefix()) {
        if (z == Complex(0.0)) return false;
    }
    if (v.tails().size() != 1) return false;
    const GeomTail& t = v.tails().front();
    return t.scale != Complex(0.0) && t.ratio != Complex(0.0);
}

} // namespace rankone
