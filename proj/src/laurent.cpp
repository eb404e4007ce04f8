#include "ksc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ksc {

Laurent::Laurent(Int constant) {
    if (constant != 0) {
        lo_ = 0;
        c_.push_back(std::move(constant));
    }
}

Laurent::Laurent(std::initializer_list<std::pair<int, Int>> terms) {
    for (const auto& [e, co] : terms) *this = *this + term(e, co);
}

Laurent Laurent::term(int exp, Int coeff) {
    Laurent p;
    if (coeff != 0) {
        p.lo_ = exp;
        p.c_.push_back(std::move(coeff));
    }
    return p;
}

Laurent Laurent::from_terms(const std::vector<std::pair<int, Int>>& terms) {
    Laurent p;
    for (const auto& [e, co] : terms) p = p + term(e, co);
    return p;
}

void Laurent::normalize() {
    size_t a = 0, b = c_.size();
    while (a < b && c_[a] == 0) ++a;
    while (b > a && c_[b - 1] == 0) --b;
    if (a == b) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (a > 0 || b < c_.size()) {
        std::vector<Int> trimmed(c_.begin() + static_cast<long>(a), c_.begin() + static_cast<long>(b));
        c_ = std::move(trimmed);
        lo_ += static_cast<int>(a);
    }
}

int Laurent::lo_exp() const {
    if (is_zero()) throw precondition_error("lo_exp of zero polynomial");
    return lo_;
}

int Laurent::hi_exp() const {
    if (is_zero()) throw precondition_error("hi_exp of zero polynomial");
    return lo_ + static_cast<int>(c_.size()) - 1;
}

int Laurent::span() const { return hi_exp() - lo_exp(); }

Int Laurent::coeff(int exp) const {
    if (is_zero() || exp < lo_ || exp >= lo_ + static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(exp - lo_)];
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const Int& x : c_) s += x;
    return s;
}

Laurent Laurent::involute() const {
    if (is_zero()) return {};
    Laurent r;
    r.lo_ = -(lo_ + static_cast<int>(c_.size()) - 1);
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

std::vector<std::pair<int, Int>> Laurent::terms() const {
    std::vector<std::pair<int, Int>> out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
    return out;
}

std::string Laurent::to_json() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [e, co] : terms()) {
        if (!first) os << ',';
        first = false;
        os << '"' << e << "\":" << co;
    }
    os << '}';
    return os.str();
}

std::string Laurent::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, co] : terms()) {
        Int a = co;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << '*';
            os << 't';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.lo_ + static_cast<int>(a.c_.size()), b.lo_ + static_cast<int>(b.c_.size()));
    Laurent r;
    r.lo_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<size_t>(a.lo_ - lo) + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
    r.normalize();
    return r;
}

Laurent operator-(const Laurent& a) {
    Laurent r = a;
    for (Int& x : r.c_) x = -x;
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
}

Laurent Laurent::divide_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw precondition_error("division by zero polynomial");
    if (a.is_zero()) return {};
    Laurent rem = a;
    Laurent quo;
    const int bhi = b.hi_exp();
    const Int& blead = b.c_.back();
    while (!rem.is_zero()) {
        const int rhi = rem.hi_exp();
        Int q = rem.c_.back() / blead;
        if (q * blead != rem.c_.back())
            throw precondition_error("non-exact polynomial division");
        Laurent t = term(rhi - bhi, q);
        quo = quo + t;
        rem = rem - t * b;
        if (!rem.is_zero() && rem.hi_exp() >= rhi)
            throw precondition_error("non-exact polynomial division");
    }
    return quo;
}

Laurent canonicalize(const Laurent& p) {
    if (p.is_zero()) throw precondition_error("canonicalize(0) is undefined");
    const int span = p.span();
    Laurent q = p.shifted(-(span / 2) - p.lo_exp());
    if (q.coeff(q.hi_exp()) < 0) q = -q;
    return q;
}

Laurent det_laurent_cofactor(const LaurentMatrix& m) {
    const size_t n = m.size();
    if (n == 0) return Laurent(1);
    if (n == 1) return m[0][0];
    std::vector<size_t> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = i;

    // Expansion along the first remaining row over an index subset.
    struct Rec {
        const LaurentMatrix& m;
        Laurent run(size_t row, std::vector<size_t>& cols) {
            if (cols.size() == 1) return m[row][cols[0]];
            Laurent acc;
            for (size_t k = 0; k < cols.size(); ++k) {
                if (m[row][cols[k]].is_zero()) continue;
                size_t col = cols[k];
                cols.erase(cols.begin() + static_cast<long>(k));
                Laurent sub = run(row + 1, cols);
                cols.insert(cols.begin() + static_cast<long>(k), col);
                Laurent contrib = m[row][col] * sub;
                acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
            }
            return acc;
        }
    } rec{m};
    return rec.run(0, cols);
}

Laurent det_laurent_bareiss(const LaurentMatrix& input) {
    const size_t n = input.size();
    if (n == 0) return Laurent(1);
    LaurentMatrix m = input;
    int sign = 1;
    Laurent prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == k) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Laurent num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = Laurent::divide_exact(num, prev);
            }
            m[i][k] = Laurent{};
        }
        prev = m[k][k];
    }
    Laurent det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Laurent det_laurent(const LaurentMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw precondition_error("determinant of non-square matrix");
    return m.size() <= 6 ? det_laurent_cofactor(m) : det_laurent_bareiss(m);
}

} // namespace ksc
