/*
   Copyright 2026 The capelli Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CAPELLI_POLYNOMIAL_HPP
#define CAPELLI_POLYNOMIAL_HPP

#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bignat.hpp"

namespace capelli {

/// What a coefficient field must provide. Elements are plain values; all
/// arithmetic goes through the (immutable) field object.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a, std::int64_t i, std::uint64_t u) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.neg(a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.equal(a, a) } -> std::convertible_to<bool>;
    { f.from_integer(i) } -> std::convertible_to<typename F::Element>;
    { f.element_at(u) } -> std::convertible_to<typename F::Element>;
    { f.order() } -> std::convertible_to<BigNat>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
};

template <class F>
concept HasConvolution = requires(const F& f, const std::vector<typename F::Element>& v) {
    { f.convolve(v, v) } -> std::same_as<std::vector<typename F::Element>>;
    { f.square_poly(v) } -> std::same_as<std::vector<typename F::Element>>;
};

/// Degree reported for the zero polynomial.
inline constexpr std::int64_t kDegreeOfZero = std::numeric_limits<std::int64_t>::min();

/// Dense univariate polynomial; coefficient i multiplies x^i. Always
/// normalized: the top stored coefficient is nonzero, and zero is empty.
template <CoefficientField F>
class Polynomial {
   public:
    using Field = F;
    using Element = typename F::Element;

    explicit Polynomial(std::shared_ptr<const F> field, std::vector<Element> coeffs = {})
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        if (!field_) throw std::invalid_argument("polynomial needs a coefficient field");
        normalize();
    }

    static Polynomial monomial(std::shared_ptr<const F> field, Element c, std::size_t power) {
        std::vector<Element> coeffs(power + 1, field->zero());
        coeffs[power] = std::move(c);
        return Polynomial(std::move(field), std::move(coeffs));
    }
    static Polynomial x(std::shared_ptr<const F> field) {
        auto one = field->one();
        return monomial(std::move(field), one, 1);
    }
    static Polynomial constant(std::shared_ptr<const F> field, Element c) {
        return Polynomial(std::move(field), std::vector<Element>{std::move(c)});
    }

    const F& field() const noexcept { return *field_; }
    const std::shared_ptr<const F>& field_ptr() const noexcept { return field_; }
    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t degree() const noexcept {
        return coeffs_.empty() ? kDegreeOfZero : static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const Element& leading() const {
        if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }
    bool is_monic() const { return !coeffs_.empty() && field_->equal(coeffs_.back(), field_->one()); }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += field_->is_zero(c) ? 0 : 1;
        return n;
    }

    void require_same_field(const Polynomial& other) const {
        if (field_ != other.field_ && !(*field_ == *other.field_)) {
            throw std::invalid_argument("polynomials live over different coefficient fields");
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.require_same_field(b);
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (!a.field_->equal(a.coeffs_[i], b.coeffs_[i])) return false;
        }
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same_field(b);
        const F& f = *a.field_;
        std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
        return Polynomial(a.field_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.require_same_field(b);
        const F& f = *a.field_;
        std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()), f.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.field_, std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Element> out;
        out.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) out.push_back(a.field_->neg(c));
        return Polynomial(a.field_, std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_field(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        const F& f = *a.field_;
        if constexpr (HasConvolution<F>) {
            return Polynomial(a.field_, &a == &b ? f.square_poly(a.coeffs_) : f.convolve(a.coeffs_, b.coeffs_));
        } else {
            std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
            for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
                if (f.is_zero(a.coeffs_[i])) continue;
                for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                    out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
                }
            }
            return Polynomial(a.field_, std::move(out));
        }
    }

    Polynomial scaled(const Element& c) const {
        std::vector<Element> out;
        out.reserve(coeffs_.size());
        for (const auto& e : coeffs_) out.push_back(field_->mul(e, c));
        return Polynomial(field_, std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
        return scaled(field_->inv(coeffs_.back()));
    }

    Element evaluate(const Element& at) const {
        const F& f = *field_;
        Element acc = f.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, at), *it);
        return acc;
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::shared_ptr<const F> field_;
    std::vector<Element> coeffs_;
};

template <CoefficientField F>
struct DivMod {
    Polynomial<F> quotient;
    Polynomial<F> remainder;
};

/// Long division: a = quotient * b + remainder, deg(remainder) < deg(b).
template <CoefficientField F>
DivMod<F> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    a.require_same_field(b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const F& f = a.field();
    using E = typename F::Element;
    std::vector<E> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t m = bc.size() - 1;
    if (r.size() <= m) return {Polynomial<F>(a.field_ptr()), a};

    const bool unit_lead = f.equal(bc.back(), f.one());
    const E lead_inv = unit_lead ? f.one() : f.inv(bc.back());
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m; ++j) {
        if (!f.is_zero(bc[j])) support.push_back(j);
    }
    std::vector<E> q(r.size() - m, f.zero());
    for (std::size_t i = r.size() - 1;; --i) {
        if (!f.is_zero(r[i])) {
            E t = unit_lead ? r[i] : f.mul(r[i], lead_inv);
            for (std::size_t j : support) r[i - m + j] = f.sub(r[i - m + j], f.mul(t, bc[j]));
            r[i] = f.zero();
            q[i - m] = std::move(t);
        }
        if (i == m) break;
    }
    r.resize(m, f.zero());
    return {Polynomial<F>(a.field_ptr(), std::move(q)), Polynomial<F>(a.field_ptr(), std::move(r))};
}

template <CoefficientField F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).remainder;
}

/// Monic gcd. gcd(a, 0) is monic(a); both zero is an error.
template <CoefficientField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    a.require_same_field(b);
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <CoefficientField F>
Polynomial<F> mulmod(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& modulus) {
    return (a * b) % modulus;
}

/// base^e mod modulus by left-to-right square-and-multiply.
template <CoefficientField F>
Polynomial<F> powmod(const Polynomial<F>& base, const BigNat& e, const Polynomial<F>& modulus) {
    if (modulus.is_zero()) throw std::domain_error("powmod with zero modulus");
    if (modulus.degree() < 1) throw std::domain_error("powmod modulus must have degree >= 1");
    const Polynomial<F> b = base % modulus;
    Polynomial<F> result = Polynomial<F>::constant(base.field_ptr(), base.field().one());
    for (std::size_t i = bit_length(e); i-- > 0;) {
        result = (result * result) % modulus;
        if (bit_at(e, i)) result = (result * b) % modulus;
    }
    return result;
}

/// b(x^d). Degree scales by d, term count is unchanged.
template <CoefficientField F>
Polynomial<F> compose_power(const Polynomial<F>& b, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("compose_power: d must be at least 1");
    if (b.is_zero()) return b;
    const F& f = b.field();
    std::vector<typename F::Element> out((b.coeffs().size() - 1) * d + 1, f.zero());
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i * d] = b.coeffs()[i];
    return Polynomial<F>(b.field_ptr(), std::move(out));
}

}  // namespace capelli

#endif
