#include <orthogen/poly.hpp>

#include <algorithm>
#include <stdexcept>

namespace orthogen {

PolyX::PolyX(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

PolyX::PolyX(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs)
{
    trim();
}

PolyX PolyX::constant(const Rational& c) { return PolyX({c}); }

PolyX PolyX::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return PolyX(std::move(v));
}

void PolyX::trim()
{
    while (!coeffs_.empty() && orthogen::is_zero(coeffs_.back()))
        coeffs_.pop_back();
}

Rational PolyX::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& PolyX::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool PolyX::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Rational PolyX::operator()(const Rational& x0) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

PolyX& PolyX::operator+=(const PolyX& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

PolyX& PolyX::operator*=(const Rational& s)
{
    if (orthogen::is_zero(s)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

PolyX PolyX::shifted() const
{
    if (coeffs_.empty())
        return {};
    std::vector<Rational> v;
    v.reserve(coeffs_.size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return PolyX(std::move(v));
}

PolyX PolyX::scale_argument(const Rational& s) const
{
    std::vector<Rational> v = coeffs_;
    Rational power(1);
    for (auto& c : v) {
        c *= power;
        power *= s;
    }
    return PolyX(std::move(v));
}

PolyX operator+(PolyX p, const PolyX& q) { return p += q; }
PolyX operator-(PolyX p, const PolyX& q) { return p -= q; }
PolyX operator-(PolyX p) { return p *= Rational(-1); }
PolyX operator*(PolyX p, const Rational& s) { return p *= s; }
PolyX operator*(const Rational& s, PolyX p) { return p *= s; }

PolyX operator*(const PolyX& p, const PolyX& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Rational> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            v[i + j] += a[i] * b[j];
    }
    return PolyX(std::move(v));
}

std::string to_display_string(const PolyX& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (is_zero(c[k]))
            continue;
        Rational mag = abs(c[k]);
        if (out.empty())
            out += sgn(c[k]) < 0 ? "-" : "";
        else
            out += sgn(c[k]) < 0 ? " - " : " + ";
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1)
            out += to_string(mag) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
}

} // namespace orthogen
