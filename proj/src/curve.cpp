#include "tttest/curve.hpp"

#include "tttest/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <string>

namespace ttt {

std::string_view to_string(CurveKind kind) noexcept {
    return kind == CurveKind::Linear ? "linear" : "step";
}

CurveKind parse_curve_kind(std::string_view text) {
    if (text == "linear") return CurveKind::Linear;
    if (text == "step") return CurveKind::Step;
    throw Error(ErrorCode::ParseError, "unknown curve kind '" + std::string(text) + "'");
}

PiecewiseCurve::PiecewiseCurve(std::vector<double> abscissae, std::vector<double> values,
                               CurveKind kind)
    : p_(std::move(abscissae)), v_(std::move(values)), kind_(kind) {
    if (p_.size() != v_.size()) {
        throw Error(ErrorCode::LengthMismatch, "knot abscissae and values differ in length");
    }
    if (p_.size() < 2 || p_.front() != 0.0 || p_.back() != 1.0) {
        throw Error(ErrorCode::InvalidParameter, "knots must span [0,1] with p_0 = 0, p_K = 1");
    }
    for (std::size_t k = 1; k < p_.size(); ++k) {
        if (!(p_[k] > p_[k - 1])) {
            throw Error(ErrorCode::InvalidParameter, "knot abscissae must be strictly increasing");
        }
    }
    for (double v : v_) {
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "curve value is not finite");
    }
}

double PiecewiseCurve::operator()(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::DomainError, "curve evaluated outside [0,1]");
    }
    // First knot with abscissa >= p.
    const auto it = std::lower_bound(p_.begin(), p_.end(), p);
    const auto k = static_cast<std::size_t>(it - p_.begin());
    if (*it == p || kind_ == CurveKind::Step) return v_[k];
    const double t = (p - p_[k - 1]) / (p_[k] - p_[k - 1]);
    return v_[k - 1] + t * (v_[k] - v_[k - 1]);
}

PiecewiseCurve PiecewiseCurve::scaled(double c) const {
    std::vector<double> v(v_);
    for (double& x : v) x *= c;
    return {p_, std::move(v), kind_};
}

std::vector<double> merge_grids(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

template <typename Op>
PiecewiseCurve combine(const PiecewiseCurve& a, const PiecewiseCurve& b, Op op) {
    if (a.kind() != b.kind()) {
        throw Error(ErrorCode::KindMismatch, "cannot combine linear and step curves");
    }
    auto grid = merge_grids(a.abscissae(), b.abscissae());
    std::vector<double> values;
    values.reserve(grid.size());
    for (double p : grid) values.push_back(op(a(p), b(p)));
    return {std::move(grid), std::move(values), a.kind()};
}

}  // namespace

PiecewiseCurve curve_difference(const PiecewiseCurve& a, const PiecewiseCurve& b) {
    return combine(a, b, [](double x, double y) { return x - y; });
}

PiecewiseCurve curve_sum(const PiecewiseCurve& a, const PiecewiseCurve& b) {
    return combine(a, b, [](double x, double y) { return x + y; });
}

void write_curve_csv(const PiecewiseCurve& curve, std::ostream& out) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "p,value\n";
    for (std::size_t k = 0; k < curve.knot_count(); ++k) {
        out << curve.abscissae()[k] << ',' << curve.values()[k] << '\n';
    }
    out.precision(old_precision);
}

}  // namespace ttt
