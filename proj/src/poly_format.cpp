#include "rgrec/poly_format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rgrec/analysis.hpp"

namespace rgrec {

namespace {

std::string latex_rational(const BigRational& magnitude)
{
    if (magnitude.is_integer()) return magnitude.to_short_string();
    return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
}

std::string latex_monomial(const ExponentVector& e)
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << " ";
        os << "t";
        if (e.size() > 1) os << "_" << i + 1;
        if (e[i] != 1) os << "^{" << e[i] << "}";
        any = true;
    }
    return os.str();
}

ExponentVector negated(const ExponentVector& e)
{
    ExponentVector out = e;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -out[i];
    return out;
}

// Appends " + |c| body" with the sign of c, or the leading form for the first term.
void emit(std::ostringstream& os, bool& first, const BigRational& c, const std::string& body)
{
    const bool negative = c.sign() < 0;
    const BigRational magnitude = c.abs();
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    first = false;
    if (body.empty()) {
        os << latex_rational(magnitude);
        return;
    }
    if (magnitude != BigRational(1)) os << latex_rational(magnitude) << "\\,";
    os << body;
}

}  // namespace

std::string z_polynomial_latex(const std::vector<BigRational>& coeffs)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) continue;
        std::string body;
        if (k == 1) body = "z";
        else if (k > 1) body = "z^{" + std::to_string(k) + "}";
        emit(os, first, coeffs[k], body);
    }
    if (first) os << "0";
    return os.str();
}

std::string to_latex(const LaurentPoly& p)
{
    if (p.is_zero()) return "0";
    std::vector<std::pair<ExponentVector, BigRational>> ordered(p.terms().begin(), p.terms().end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = a.first.total_degree(), db = b.first.total_degree();
        if (da != db) return da > db;
        return a.first > b.first;
    });

    std::ostringstream os;
    bool first = true;
    std::set<ExponentVector> done;
    for (const auto& [e, c] : ordered) {
        if (done.contains(e)) continue;
        done.insert(e);
        const ExponentVector inverse = negated(e);
        if (inverse != e && p.coefficient(inverse) == c) {
            done.insert(inverse);
            emit(os, first, c, "\\left(" + latex_monomial(e) + " + " + latex_monomial(inverse) + "\\right)");
        } else {
            emit(os, first, c, latex_monomial(e));
        }
    }
    if (p.nvars() == 1)
        if (const auto z = analysis::to_z_polynomial(p)) os << "\n= " << z_polynomial_latex(*z);
    return os.str();
}

std::string to_pretty(const LaurentPoly& p)
{
    std::string out = p.to_string();
    if (p.nvars() == 1) {
        if (const auto z = analysis::to_z_polynomial(p)) {
            std::ostringstream os;
            bool first = true;
            for (std::size_t k = z->size(); k-- > 0;) {
                const BigRational& c = (*z)[k];
                if (c.is_zero()) continue;
                os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ")) << c.abs();
                if (k > 0) os << "*z^" << k;
                first = false;
            }
            out += "\nz-form: " + (first ? std::string("0") : os.str());
        }
    }
    return out;
}

}  // namespace rgrec
