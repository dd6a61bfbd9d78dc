#include "quartet/poly.hpp"

#include "quartet/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace quartet {

namespace {
const ExactInt kZero = 0;

// Shared rendering for both polynomial types. Monomials arrive as
// (pdeg, qdeg, coeff) with coeff != 0.
struct Monomial {
    int i, j;
    const ExactInt* c;
};

std::string render(std::vector<Monomial> ms) {
    if (ms.empty())
        return "0";
    std::sort(ms.begin(), ms.end(), [](const Monomial& x, const Monomial& y) {
        return std::make_tuple(-(x.i + x.j), -x.i) < std::make_tuple(-(y.i + y.j), -y.i);
    });
    std::string out;
    for (const Monomial& m : ms) {
        bool neg = *m.c < 0;
        if (out.empty()) {
            if (neg)
                out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        ExactInt mag = neg ? ExactInt(-*m.c) : *m.c;
        std::string vars;
        if (m.i > 0) {
            vars += 'p';
            if (m.i > 1)
                vars += "^" + std::to_string(m.i);
        }
        if (m.j > 0) {
            vars += 'q';
            if (m.j > 1)
                vars += "^" + std::to_string(m.j);
        }
        if (vars.empty())
            out += mag.str();
        else {
            if (mag != 1)
                out += mag.str();
            out += vars;
        }
    }
    return out;
}
} // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<ExactInt> coeffs) : c_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(ExactInt c) {
    UniPoly f;
    if (c != 0)
        f.c_.push_back(std::move(c));
    return f;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

std::optional<int> UniPoly::degree() const {
    if (c_.empty())
        return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

const ExactInt& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return kZero;
    return c_[static_cast<size_t>(i)];
}

const ExactInt& UniPoly::leading() const {
    if (c_.empty())
        throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

ExactInt UniPoly::eval(const ExactInt& p) const {
    ExactInt v = 0;
    for (size_t i = c_.size(); i-- > 0;)
        v = v * p + c_[i];
    return v;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return UniPoly();
    std::vector<ExactInt> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<int>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::reflected() const {
    std::vector<ExactInt> r = c_;
    for (size_t i = 1; i < r.size(); i += 2)
        r[i] = -r[i];
    return UniPoly(std::move(r));
}

BiPoly UniPoly::to_bipoly() const {
    std::vector<std::vector<ExactInt>> rows;
    rows.reserve(c_.size());
    for (const ExactInt& c : c_)
        rows.push_back({c});
    return BiPoly::from_rows(std::move(rows));
}

UniPoly UniPoly::operator-() const {
    std::vector<ExactInt> r = c_;
    for (ExactInt& c : r)
        c = -c;
    return UniPoly(std::move(r));
}

UniPoly operator+(const UniPoly& f, const UniPoly& g) {
    std::vector<ExactInt> r(std::max(f.c_.size(), g.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& f, const UniPoly& g) {
    std::vector<ExactInt> r(std::max(f.c_.size(), g.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = f.coeff(static_cast<int>(i)) - g.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero())
        return UniPoly();
    std::vector<ExactInt> r(f.c_.size() + g.c_.size() - 1, 0);
    for (size_t i = 0; i < f.c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j)
            r[i + j] += f.c_[i] * g.c_[j];
    return UniPoly(std::move(r));
}

bool operator==(const UniPoly& f, const UniPoly& g) {
    return f.c_ == g.c_;     // both trimmed, so representations are canonical
}

std::string UniPoly::str() const {
    std::vector<Monomial> ms;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            ms.push_back({static_cast<int>(i), 0, &c_[i]});
    return render(std::move(ms));
}

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, ExactInt(0)) {}

BiPoly BiPoly::constant(ExactInt c) {
    if (c == 0)
        return BiPoly();
    BiPoly f(1, 1);
    f.at(0, 0) = std::move(c);
    return f;
}

BiPoly BiPoly::monomial(ExactInt coeff, int pdeg, int qdeg) {
    if (pdeg < 0 || qdeg < 0)
        throw std::invalid_argument("monomial: negative exponent");
    if (coeff == 0)
        return BiPoly();
    BiPoly f(pdeg + 1, qdeg + 1);
    f.at(pdeg, qdeg) = std::move(coeff);
    return f;
}

BiPoly BiPoly::from_rows(std::vector<std::vector<ExactInt>> rows) {
    size_t cols = 0;
    for (const auto& r : rows)
        cols = std::max(cols, r.size());
    if (rows.empty() || cols == 0)
        return BiPoly();
    BiPoly f(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            f.at(static_cast<int>(i), static_cast<int>(j)) = std::move(rows[i][j]);
    f.trim();
    return f;
}

void BiPoly::trim() {
    int max_i = -1, max_j = -1;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) {
                max_i = std::max(max_i, i);
                max_j = std::max(max_j, j);
            }
    if (max_i < 0) {
        rows_ = cols_ = 0;
        data_.clear();
        return;
    }
    if (max_i + 1 == rows_ && max_j + 1 == cols_)
        return;
    BiPoly shrunk(max_i + 1, max_j + 1);
    for (int i = 0; i <= max_i; ++i)
        for (int j = 0; j <= max_j; ++j)
            shrunk.at(i, j) = std::move(at(i, j));
    *this = std::move(shrunk);
}

const ExactInt& BiPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
        return kZero;
    return at(i, j);
}

std::optional<int> BiPoly::degree_p() const {
    if (is_zero())
        return std::nullopt;
    return rows_ - 1;
}

std::optional<int> BiPoly::degree_q() const {
    if (is_zero())
        return std::nullopt;
    return cols_ - 1;
}

ExactInt BiPoly::eval(const ExactInt& p, const ExactInt& q) const {
    ExactInt v = 0;
    for (int i = rows_; i-- > 0;) {
        ExactInt row = 0;
        for (int j = cols_; j-- > 0;)
            row = row * q + at(i, j);
        v = v * p + row;
    }
    return v;
}

UniPoly BiPoly::specialize_q(const ExactInt& q0) const {
    std::vector<ExactInt> c(static_cast<size_t>(rows_), ExactInt(0));
    for (int i = 0; i < rows_; ++i) {
        ExactInt row = 0;
        for (int j = cols_; j-- > 0;)
            row = row * q0 + at(i, j);
        c[static_cast<size_t>(i)] = std::move(row);
    }
    return UniPoly(std::move(c));
}

UniPoly BiPoly::to_unipoly() const {
    if (!is_univariate_p())
        throw std::logic_error("to_unipoly: polynomial involves q");
    std::vector<ExactInt> c;
    c.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        c.push_back(at(i, 0));
    return UniPoly(std::move(c));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (ExactInt& c : r.data_)
        c = -c;
    return r;
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    BiPoly r(std::max(f.rows_, g.rows_), std::max(f.cols_, g.cols_));
    for (int i = 0; i < r.rows_; ++i)
        for (int j = 0; j < r.cols_; ++j)
            r.at(i, j) = f.coeff(i, j) + g.coeff(i, j);
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& f, const BiPoly& g) {
    return f + (-g);
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        return BiPoly();
    BiPoly r(f.rows_ + g.rows_ - 1, f.cols_ + g.cols_ - 1);
    for (int i1 = 0; i1 < f.rows_; ++i1)
        for (int j1 = 0; j1 < f.cols_; ++j1) {
            const ExactInt& c1 = f.at(i1, j1);
            if (c1 == 0)
                continue;
            for (int i2 = 0; i2 < g.rows_; ++i2)
                for (int j2 = 0; j2 < g.cols_; ++j2)
                    r.at(i1 + i2, j1 + j2) += c1 * g.at(i2, j2);
        }
    r.trim();
    return r;
}

BiPoly BiPoly::pow(unsigned k) const {
    BiPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

bool operator==(const BiPoly& f, const BiPoly& g) {
    return f.rows_ == g.rows_ && f.cols_ == g.cols_ && f.data_ == g.data_;
}

std::string BiPoly::str() const {
    std::vector<Monomial> ms;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                ms.push_back({i, j, &at(i, j)});
    return render(std::move(ms));
}

// ------------------------------------------------------------- homogenize

BiPoly homogenize(const UniPoly& f, int d) {
    if (f.is_zero())
        return BiPoly();
    int deg = *f.degree();
    if (d < deg)
        throw DegreeTooSmallError("homogenize: target degree " + std::to_string(d) +
                                  " below polynomial degree " + std::to_string(deg));
    BiPoly r;
    for (int i = 0; i <= deg; ++i)
        if (f.coeff(i) != 0)
            r = r + BiPoly::monomial(f.coeff(i), i, d - i);
    return r;
}

} // namespace quartet
