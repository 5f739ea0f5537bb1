#include <algorithm>

#include "oos/bilmap.hpp"
#include "oos/space.hpp"
#include "oos/tritensor.hpp"

namespace oos {

// ------------------------------------------------------------------- Space

Space::Space(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
    require(!basis_.empty(), "space \"" + name_ + "\" must have dim >= 1");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        require(!basis_[i].empty(), "empty basis label in space " + name_);
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            require(basis_[i] != basis_[j],
                    "duplicate basis label \"" + basis_[i] + "\" in space " + name_);
    }
}

int Space::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == label) return static_cast<int>(i);
    return -1;
}

Space tensor_space(const Space& x, const Space& y) {
    std::vector<std::string> basis;
    basis.reserve(x.dim() * y.dim());
    for (const auto& a : x.basis())
        for (const auto& b : y.basis()) basis.push_back(a + "*" + b);
    return Space(x.name() + "*" + y.name(), std::move(basis));
}

// ------------------------------------------------------------------ LinMap

static void check_space(const Space& a, const Space& b, const char* what) {
    require(a == b, std::string("space mismatch (") + what + "): " + a.name() + " vs " + b.name());
}

LinMap::LinMap(RingPtr ring, Space source, Space target)
    : ring_(std::move(ring)),
      source_(std::move(source)),
      target_(std::move(target)),
      m_(source_.dim() * target_.dim(), Poly::zero(ring_)) {}

LinMap LinMap::identity(RingPtr ring, const Space& s) {
    LinMap f(std::move(ring), s, s);
    for (std::size_t i = 0; i < s.dim(); ++i) f.set(i, i, Poly::constant(f.ring_, Rat(1)));
    return f;
}

const Poly& LinMap::entry(std::size_t row, std::size_t col) const {
    return m_.at(row * source_.dim() + col);
}

void LinMap::set(std::size_t row, std::size_t col, Poly v) {
    m_.at(row * source_.dim() + col) = std::move(v);
}

std::vector<Poly> LinMap::column(std::size_t j) const {
    std::vector<Poly> out;
    out.reserve(target_.dim());
    for (std::size_t r = 0; r < target_.dim(); ++r) out.push_back(entry(r, j));
    return out;
}

std::vector<Poly> LinMap::apply(const std::vector<Poly>& v) const {
    require(v.size() == source_.dim(), "vector/source dimension mismatch in apply_linear");
    std::vector<Poly> out(target_.dim(), Poly::zero(ring_));
    for (std::size_t r = 0; r < target_.dim(); ++r)
        for (std::size_t c = 0; c < source_.dim(); ++c)
            out[r] = out[r] + entry(r, c) * v[c];
    return out;
}

LinMap LinMap::compose(const LinMap& g) const {
    check_space(g.target_, source_, "compose");
    LinMap r(ring_, g.source_, target_);
    for (std::size_t i = 0; i < target_.dim(); ++i)
        for (std::size_t j = 0; j < g.source_.dim(); ++j) {
            Poly acc = Poly::zero(ring_);
            for (std::size_t k = 0; k < source_.dim(); ++k)
                acc = acc + entry(i, k) * g.entry(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

LinMap LinMap::operator+(const LinMap& o) const {
    check_space(source_, o.source_, "add");
    check_space(target_, o.target_, "add");
    LinMap r = *this;
    for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = r.m_[i] + o.m_[i];
    return r;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + (-o); }

LinMap LinMap::operator-() const {
    LinMap r = *this;
    for (auto& e : r.m_) e = -e;
    return r;
}

LinMap LinMap::scaled(const Poly& c) const {
    LinMap r = *this;
    for (auto& e : r.m_) e = e * c;
    return r;
}

bool LinMap::operator==(const LinMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && m_ == o.m_;
}

bool LinMap::is_zero() const {
    return std::all_of(m_.begin(), m_.end(), [](const Poly& p) { return p.is_zero(); });
}

LinMap kron(const LinMap& f, const LinMap& g) {
    LinMap r(f.ring(), tensor_space(f.source(), g.source()), tensor_space(f.target(), g.target()));
    const std::size_t gs = g.source().dim(), gt = g.target().dim();
    for (std::size_t i = 0; i < f.target().dim(); ++i)
        for (std::size_t j = 0; j < f.source().dim(); ++j)
            for (std::size_t k = 0; k < gt; ++k)
                for (std::size_t l = 0; l < gs; ++l)
                    r.set(i * gt + k, j * gs + l, f.entry(i, j) * g.entry(k, l));
    return r;
}

// ------------------------------------------------------------------ BilMap

BilMap::BilMap(RingPtr ring, Space left, Space right, Space target)
    : ring_(std::move(ring)),
      left_(std::move(left)),
      right_(std::move(right)),
      target_(std::move(target)),
      t_(left_.dim() * right_.dim() * target_.dim(), Poly::zero(ring_)) {}

const Poly& BilMap::entry(std::size_t i, std::size_t j, std::size_t k) const {
    return t_.at((i * right_.dim() + j) * target_.dim() + k);
}

void BilMap::set(std::size_t i, std::size_t j, std::size_t k, Poly v) {
    t_.at((i * right_.dim() + j) * target_.dim() + k) = std::move(v);
}

std::vector<Poly> BilMap::apply(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
    require(x.size() == left_.dim() && y.size() == right_.dim(),
            "vector dimension mismatch in apply_bilinear");
    std::vector<Poly> out(target_.dim(), Poly::zero(ring_));
    for (std::size_t i = 0; i < left_.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < right_.dim(); ++j) {
            if (y[j].is_zero()) continue;
            Poly c = x[i] * y[j];
            for (std::size_t k = 0; k < target_.dim(); ++k)
                out[k] = out[k] + c * entry(i, j, k);
        }
    }
    return out;
}

BilMap BilMap::operator+(const BilMap& o) const {
    check_space(left_, o.left_, "add");
    check_space(right_, o.right_, "add");
    check_space(target_, o.target_, "add");
    BilMap r = *this;
    for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = r.t_[i] + o.t_[i];
    return r;
}

BilMap BilMap::operator-(const BilMap& o) const { return *this + (-o); }

BilMap BilMap::operator-() const {
    BilMap r = *this;
    for (auto& e : r.t_) e = -e;
    return r;
}

BilMap BilMap::scaled(const Poly& c) const {
    BilMap r = *this;
    for (auto& e : r.t_) e = e * c;
    return r;
}

bool BilMap::operator==(const BilMap& o) const {
    return left_ == o.left_ && right_ == o.right_ && target_ == o.target_ && t_ == o.t_;
}

bool BilMap::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const Poly& p) { return p.is_zero(); });
}

BilMap BilMap::swapped() const {
    BilMap r(ring_, right_, left_, target_);
    for (std::size_t i = 0; i < left_.dim(); ++i)
        for (std::size_t j = 0; j < right_.dim(); ++j)
            for (std::size_t k = 0; k < target_.dim(); ++k) r.set(j, i, k, entry(i, j, k));
    return r;
}

BilMap BilMap::precompose(const std::optional<LinMap>& f, const std::optional<LinMap>& g) const {
    if (f) check_space(f->target(), left_, "precompose left");
    if (g) check_space(g->target(), right_, "precompose right");
    const Space& nl = f ? f->source() : left_;
    const Space& nr = g ? g->source() : right_;
    BilMap r(ring_, nl, nr, target_);
    for (std::size_t i = 0; i < nl.dim(); ++i)
        for (std::size_t j = 0; j < nr.dim(); ++j) {
            // images of the basis pair
            for (std::size_t a = 0; a < left_.dim(); ++a) {
                Poly fa = f ? f->entry(a, i) : Poly::constant(ring_, Rat(a == i ? 1 : 0));
                if (fa.is_zero()) continue;
                for (std::size_t b = 0; b < right_.dim(); ++b) {
                    Poly gb = g ? g->entry(b, j) : Poly::constant(ring_, Rat(b == j ? 1 : 0));
                    if (gb.is_zero()) continue;
                    Poly c = fa * gb;
                    for (std::size_t k = 0; k < target_.dim(); ++k)
                        r.set(i, j, k, r.entry(i, j, k) + c * entry(a, b, k));
                }
            }
        }
    return r;
}

BilMap BilMap::then(const LinMap& f) const {
    check_space(f.source(), target_, "postcompose");
    BilMap r(ring_, left_, right_, f.target());
    for (std::size_t i = 0; i < left_.dim(); ++i)
        for (std::size_t j = 0; j < right_.dim(); ++j) {
            for (std::size_t k = 0; k < target_.dim(); ++k) {
                const Poly& c = entry(i, j, k);
                if (c.is_zero()) continue;
                for (std::size_t l = 0; l < f.target().dim(); ++l)
                    r.set(i, j, l, r.entry(i, j, l) + c * f.entry(l, k));
            }
        }
    return r;
}

LinMap BilMap::as_linear() const {
    LinMap r(ring_, tensor_space(left_, right_), target_);
    for (std::size_t i = 0; i < left_.dim(); ++i)
        for (std::size_t j = 0; j < right_.dim(); ++j)
            for (std::size_t k = 0; k < target_.dim(); ++k)
                r.set(k, i * right_.dim() + j, entry(i, j, k));
    return r;
}

BilMap bil_from_linear(const LinMap& f, const Space& left, const Space& right) {
    require(f.source() == tensor_space(left, right),
            "linear map source is not the tensor product " + left.name() + " (x) " + right.name());
    BilMap r(f.ring(), left, right, f.target());
    for (std::size_t i = 0; i < left.dim(); ++i)
        for (std::size_t j = 0; j < right.dim(); ++j)
            for (std::size_t k = 0; k < f.target().dim(); ++k)
                r.set(i, j, k, f.entry(k, i * right.dim() + j));
    return r;
}

// --------------------------------------------------------------- TriTensor

TriTensor::TriTensor(RingPtr ring, Space s0, Space s1, Space s2, Space target)
    : ring_(std::move(ring)),
      s0_(std::move(s0)),
      s1_(std::move(s1)),
      s2_(std::move(s2)),
      target_(std::move(target)),
      t_(s0_.dim() * s1_.dim() * s2_.dim() * target_.dim(), Poly::zero(ring_)) {}

std::size_t TriTensor::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * s1_.dim() + j) * s2_.dim() + k) * target_.dim() + l;
}

const Space& TriTensor::slot(std::size_t i) const {
    switch (i) {
        case 0: return s0_;
        case 1: return s1_;
        case 2: return s2_;
        default: fail("TriTensor slot index out of range");
    }
}

const Poly& TriTensor::entry(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return t_.at(at(i, j, k, l));
}

TriTensor TriTensor::left_nested(const BilMap& outer, const BilMap& inner) {
    check_space(inner.target(), outer.left(), "trilinear left");
    TriTensor r(outer.ring(), inner.left(), inner.right(), outer.right(), outer.target());
    for (std::size_t i = 0; i < r.s0_.dim(); ++i)
        for (std::size_t j = 0; j < r.s1_.dim(); ++j)
            for (std::size_t m = 0; m < inner.target().dim(); ++m) {
                const Poly& c = inner.entry(i, j, m);
                if (c.is_zero()) continue;
                for (std::size_t k = 0; k < r.s2_.dim(); ++k)
                    for (std::size_t l = 0; l < r.target_.dim(); ++l) {
                        auto idx = r.at(i, j, k, l);
                        r.t_[idx] = r.t_[idx] + c * outer.entry(m, k, l);
                    }
            }
    return r;
}

TriTensor TriTensor::right_nested(const BilMap& outer, const BilMap& inner) {
    check_space(inner.target(), outer.right(), "trilinear right");
    TriTensor r(outer.ring(), outer.left(), inner.left(), inner.right(), outer.target());
    for (std::size_t j = 0; j < r.s1_.dim(); ++j)
        for (std::size_t k = 0; k < r.s2_.dim(); ++k)
            for (std::size_t m = 0; m < inner.target().dim(); ++m) {
                const Poly& c = inner.entry(j, k, m);
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < r.s0_.dim(); ++i)
                    for (std::size_t l = 0; l < r.target_.dim(); ++l) {
                        auto idx = r.at(i, j, k, l);
                        r.t_[idx] = r.t_[idx] + c * outer.entry(i, m, l);
                    }
            }
    return r;
}

TriTensor TriTensor::operator+(const TriTensor& o) const {
    check_space(s0_, o.s0_, "tri add");
    check_space(s1_, o.s1_, "tri add");
    check_space(s2_, o.s2_, "tri add");
    check_space(target_, o.target_, "tri add");
    TriTensor r = *this;
    for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = r.t_[i] + o.t_[i];
    return r;
}

TriTensor TriTensor::operator-(const TriTensor& o) const {
    check_space(s0_, o.s0_, "tri sub");
    check_space(s1_, o.s1_, "tri sub");
    check_space(s2_, o.s2_, "tri sub");
    check_space(target_, o.target_, "tri sub");
    TriTensor r = *this;
    for (std::size_t i = 0; i < t_.size(); ++i) r.t_[i] = r.t_[i] - o.t_[i];
    return r;
}

TriTensor TriTensor::swap01() const {
    check_space(s0_, s1_, "swap01");
    TriTensor r(ring_, s0_, s1_, s2_, target_);
    for (std::size_t i = 0; i < s0_.dim(); ++i)
        for (std::size_t j = 0; j < s1_.dim(); ++j)
            for (std::size_t k = 0; k < s2_.dim(); ++k)
                for (std::size_t l = 0; l < target_.dim(); ++l)
                    r.t_[r.at(j, i, k, l)] = t_[at(i, j, k, l)];
    return r;
}

bool TriTensor::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const Poly& p) { return p.is_zero(); });
}

} // namespace oos
