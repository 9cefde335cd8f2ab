#pragma once

#include <optional>
#include <string>

#include "qrat.hpp"

namespace qsphere {

/// The deformation parameter: either the indeterminate q of F(q) or a fixed rational.
class QMode {
public:
    QMode() = default;

    static QMode symbolic() { return {}; }
    static QMode fixed(Rational q0) {
        QMode m;
        m.value_ = std::move(q0);
        return m;
    }
    /// "q"/"symbolic"/"" select symbolic mode, anything else is parsed as a rational.
    static QMode parse(const std::string& text) {
        if (text.empty() || text == "q" || text == "symbolic") return symbolic();
        return fixed(Rational::parse(text));
    }

    bool is_symbolic() const noexcept { return !value_.has_value(); }
    bool is_fixed() const noexcept { return value_.has_value(); }
    const Rational& value() const { return *value_; }
    bool is_zero() const { return value_ && value_->is_zero(); }

    /// q as an element of the coefficient field C.
    template <class C>
    C q() const {
        if (!value_) return C::q();
        return C(typename C::scalar_type(*value_));
    }

    /// q^k, k any integer.
    template <class C>
    C q_power(long k) const {
        if (!value_) return C::q_power(k);
        return C(typename C::scalar_type(value_->pow(k)));
    }

    /// Throws InvalidQ unless q is symbolic or a rational in [0,1).
    void require_unit_interval() const {
        if (value_ && (value_->sign() < 0 || *value_ >= Rational(1))) throw InvalidQ(value_->str());
    }

    std::string str() const { return value_ ? value_->str() : "q"; }

    friend bool operator==(const QMode&, const QMode&) = default;

private:
    std::optional<Rational> value_;
};

template <class C>
C from_rational(const Rational& r) {
    return C(typename C::scalar_type(r));
}

}  // namespace qsphere
