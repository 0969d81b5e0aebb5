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

#ifndef CAPELLI_EXTENSION_FIELD_HPP
#define CAPELLI_EXTENSION_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bignat.hpp"
#include "detail/fp_kernels.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "polytext.hpp"
#include "prime_field.hpp"

namespace capelli {

class ReducibleModulus : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// F_p[x]/(b) for monic irreducible b of degree m >= 1. With b = x this is
/// F_p itself, which lets prime and extension fields share one code path.
///
/// Elements are residue coefficient vectors of length < m with the top
/// coefficient nonzero (zero is empty). Every operation returns a reduced
/// representative.
class ExtensionField {
    struct Private {};

   public:
    using Element = std::vector<std::uint64_t>;

    ExtensionField(Private, Polynomial<PrimeField> modulus)
        : base_(modulus.field()),
          modulus_(std::move(modulus)),
          tail_(detail::make_sparse_tail(base_.characteristic(), modulus_.coeffs())),
          order_minus_one_(big_pow(base_.characteristic(), degree()) - 1) {}

    /// Builds the field. Unless trusted, the modulus is checked with Rabin's
    /// test and a reducible modulus is rejected.
    static std::shared_ptr<const ExtensionField> create(const Polynomial<PrimeField>& modulus, bool trusted = false) {
        if (modulus.is_zero() || modulus.degree() < 1) {
            throw std::invalid_argument("extension modulus must have degree at least 1");
        }
        if (!modulus.is_monic()) throw std::invalid_argument("extension modulus must be monic");
        if (!trusted && !rabin_test(modulus).irreducible) {
            throw ReducibleModulus("modulus " + capelli::render(modulus) + " is reducible over F_" +
                                   std::to_string(modulus.field().characteristic()));
        }
        return std::make_shared<const ExtensionField>(Private{}, modulus);
    }

    static std::shared_ptr<const ExtensionField> prime_field(PrimeModulus p) {
        return create(Polynomial<PrimeField>::x(std::make_shared<const PrimeField>(p)), true);
    }

    const PrimeField& base() const noexcept { return base_; }
    const Polynomial<PrimeField>& modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return base_.characteristic(); }
    std::size_t degree() const noexcept { return modulus_.coeffs().size() - 1; }
    const BigNat& order_minus_one() const noexcept { return order_minus_one_; }
    BigNat order() const { return order_minus_one_ + 1; }

    Element zero() const { return {}; }
    Element one() const { return reduce(Element{1}); }
    bool is_zero(const Element& a) const noexcept { return a.empty(); }
    bool equal(const Element& a, const Element& b) const noexcept { return a == b; }

    Element from_integer(std::int64_t v) const { return reduce(Element{base_.from_integer(v)}); }

    /// Class of x, i.e. a root of the modulus.
    Element root() const { return reduce(Element{0, 1}); }

    /// Reduces an arbitrary vector of residues mod p modulo the modulus.
    Element reduce(Element v) const {
        detail::trim(v);
        detail::fp_reduce(base_.characteristic(), v, tail_);
        return v;
    }

    Element add(const Element& a, const Element& b) const {
        Element out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = base_.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        }
        detail::trim(out);
        return out;
    }
    Element sub(const Element& a, const Element& b) const {
        Element out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = base_.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        }
        detail::trim(out);
        return out;
    }
    Element neg(const Element& a) const {
        Element out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = base_.neg(a[i]);
        return out;
    }
    Element mul(const Element& a, const Element& b) const {
        Element out = detail::fp_convolve(base_.characteristic(), a, b);
        detail::fp_reduce(base_.characteristic(), out, tail_);
        return out;
    }
    Element square(const Element& a) const {
        Element out = detail::fp_square(base_.characteristic(), a);
        detail::fp_reduce(base_.characteristic(), out, tail_);
        return out;
    }
    Element pow(const Element& a, const BigNat& e) const {
        Element result = one();
        for (std::size_t i = bit_length(e); i-- > 0;) {
            result = square(result);
            if (bit_at(e, i)) result = mul(result, a);
        }
        return result;
    }
    Element inv(const Element& a) const {
        if (a.empty()) throw std::domain_error("inverse of zero in an extension field");
        return pow(a, order_minus_one_ - 1);
    }

    /// Bijection [0, q) -> field: base-p digits of index, least significant first.
    Element element_at(std::uint64_t index) const {
        const std::uint64_t p = base_.characteristic();
        Element out;
        for (std::size_t j = 0; j < degree() && index != 0; ++j) {
            out.push_back(index % p);
            index /= p;
        }
        detail::trim(out);
        return out;
    }

    Polynomial<PrimeField> to_poly(const Element& a) const { return Polynomial<PrimeField>(modulus_.field_ptr(), a); }
    Element from_poly(const Polynomial<PrimeField>& f) const {
        if (!(f.field() == base_)) throw std::invalid_argument("element lives over a different prime field");
        return reduce(f.coeffs());
    }

    std::string render(const Element& a) const { return detail::render_fp_coeffs(a); }

    friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
        return a.base_ == b.base_ && a.modulus_.coeffs() == b.modulus_.coeffs();
    }

   private:
    PrimeField base_;
    Polynomial<PrimeField> modulus_;
    detail::SparseTail tail_;
    BigNat order_minus_one_;
};

/// An element bundled with the field it lives in.
class ExtElement {
   public:
    ExtElement(std::shared_ptr<const ExtensionField> field, ExtensionField::Element value)
        : field_(std::move(field)), value_(field_->reduce(std::move(value))) {}

    static ExtElement from_integer(std::shared_ptr<const ExtensionField> field, std::int64_t v) {
        auto value = field->from_integer(v);
        return ExtElement(std::move(field), std::move(value));
    }
    static ExtElement root_of(std::shared_ptr<const ExtensionField> field) {
        auto value = field->root();
        return ExtElement(std::move(field), std::move(value));
    }

    const ExtensionField& field() const noexcept { return *field_; }
    const std::shared_ptr<const ExtensionField>& field_ptr() const noexcept { return field_; }
    const ExtensionField::Element& value() const noexcept { return value_; }
    Polynomial<PrimeField> repr() const { return field_->to_poly(value_); }
    bool is_zero() const noexcept { return value_.empty(); }
    bool is_one() const { return value_ == field_->one(); }
    std::string to_string() const { return field_->render(value_); }

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return *a.field_ == *b.field_ && a.value_ == b.value_;
    }
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
        a.require_same_field(b);
        return ExtElement(a.field_, a.field_->mul(a.value_, b.value_));
    }
    friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
        a.require_same_field(b);
        return ExtElement(a.field_, a.field_->add(a.value_, b.value_));
    }
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b) {
        a.require_same_field(b);
        return ExtElement(a.field_, a.field_->sub(a.value_, b.value_));
    }

   private:
    void require_same_field(const ExtElement& other) const {
        if (field_ != other.field_ && !(*field_ == *other.field_)) {
            throw std::invalid_argument("elements live in different fields");
        }
    }

    std::shared_ptr<const ExtensionField> field_;
    ExtensionField::Element value_;
};

inline ExtElement ext_pow(const ExtElement& a, const BigNat& e) {
    return ExtElement(a.field_ptr(), a.field().pow(a.value(), e));
}

}  // namespace capelli

#endif
