#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace ccx {

inline constexpr double kPlusInfinity = std::numeric_limits<double>::infinity();

// Dense row-major real table. Entries may be +inf where a type permits
// extended values; constructors of concrete domain types enforce finiteness
// where required.
class Table {
  public:
    Table() = default;
    Table(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {
        assert(rows >= 0 && cols >= 0);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return v_.empty(); }

    double& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return v_[static_cast<std::size_t>(i) * cols_ + j];
    }
    double at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return v_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

    bool all_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    // At least one finite entry (extended-real tables).
    bool is_proper() const {
        for (double x : v_)
            if (std::isfinite(x)) return true;
        return false;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_)
            if (std::isfinite(x)) m = std::max(m, std::abs(x));
        return m;
    }

    friend bool operator==(const Table& a, const Table& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

// Largest |a - b| over all entries, treating equal infinities as distance 0.
inline double max_abs_diff(const Table& a, const Table& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        double x = a.data()[k], y = b.data()[k];
        if (std::isinf(x) && std::isinf(y) && x == y) continue;
        m = std::max(m, std::abs(x - y));
    }
    return m;
}

inline Table transpose(const Table& a) {
    Table t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

}  // namespace ccx
