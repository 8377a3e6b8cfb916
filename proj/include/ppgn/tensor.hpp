#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ppgn {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_numel(const Shape& s) {
    std::size_t n = 1;
    for (std::size_t d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    os << ']';
    return os.str();
}

// Dense row-major float64 array. Values are validated finite at
// construction; ops re-validate their outputs so a NaN/Inf cannot
// propagate silently.
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(Shape shape)
        : shape_(std::move(shape)), data_(shape_numel(shape_), 0.0) {
        validate_shape();
    }

    Tensor(Shape shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        validate_shape();
        if (data_.size() != shape_numel(shape_))
            throw std::invalid_argument("tensor: data length " + std::to_string(data_.size()) +
                                        " does not match shape " + shape_str(shape_));
        check_finite("construction");
    }

    static Tensor full(Shape shape, double v) {
        Tensor t(std::move(shape));
        for (double& x : t.data_) x = v;
        t.check_finite("construction");
        return t;
    }

    static Tensor scalar(double v) { return full({1}, v); }

    static Tensor zeros_like(const Tensor& o) { return Tensor(o.shape_); }

    const Shape& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t numel() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    // 2-D accessors (row-major)
    std::size_t rows() const { return shape_.empty() ? 0 : shape_[0]; }
    std::size_t cols() const { return shape_.size() < 2 ? 1 : shape_[1]; }
    double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& vec() { return data_; }
    const std::vector<double>& vec() const { return data_; }

    double item() const {
        if (numel() != 1) throw std::invalid_argument("tensor: item() on non-scalar " + shape_str(shape_));
        return data_[0];
    }

    bool finite() const {
        for (double x : data_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    void check_finite(const std::string& where) const {
        if (!finite()) throw std::runtime_error("tensor: non-finite value after " + where);
    }

    // Same data, new shape; numel must match.
    Tensor reshaped(Shape shape) const {
        if (shape_numel(shape) != numel())
            throw std::invalid_argument("tensor: cannot reshape " + shape_str(shape_) + " to " + shape_str(shape));
        return Tensor(std::move(shape), data_);
    }

    Tensor row(std::size_t r) const {
        const std::size_t c = cols();
        return Tensor({c}, std::vector<double>(data_.begin() + r * c, data_.begin() + (r + 1) * c));
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    bool bit_equal(const Tensor& o) const { return shape_ == o.shape_ && data_ == o.data_; }

  private:
    void validate_shape() const {
        for (std::size_t d : shape_)
            if (d == 0) throw std::invalid_argument("tensor: zero dimension in shape " + shape_str(shape_));
    }

    Shape shape_;
    std::vector<double> data_;
};

// -- plain (tape-free) arithmetic used by samplers and inference paths --

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape_str(a.shape()) +
                                    " vs " + shape_str(b.shape()));
}

inline Tensor add(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "add");
    Tensor out = a;
    for (std::size_t i = 0; i < out.numel(); ++i) out[i] += b[i];
    return out;
}

inline Tensor sub(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "sub");
    Tensor out = a;
    for (std::size_t i = 0; i < out.numel(); ++i) out[i] -= b[i];
    return out;
}

inline Tensor mul(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "mul");
    Tensor out = a;
    for (std::size_t i = 0; i < out.numel(); ++i) out[i] *= b[i];
    return out;
}

inline Tensor scale(const Tensor& a, double c) {
    Tensor out = a;
    for (std::size_t i = 0; i < out.numel(); ++i) out[i] *= c;
    return out;
}

// y += c * x
inline void axpy(double c, const Tensor& x, Tensor& y) {
    require_same_shape(x, y, "axpy");
    for (std::size_t i = 0; i < y.numel(); ++i) y[i] += c * x[i];
}

inline double dot(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "dot");
    double s = 0;
    for (std::size_t i = 0; i < a.numel(); ++i) s += a[i] * b[i];
    return s;
}

inline double l2_norm(const Tensor& a) { return std::sqrt(dot(a, a)); }

inline double l2_dist(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "l2_dist");
    double s = 0;
    for (std::size_t i = 0; i < a.numel(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double mean(const Tensor& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.numel(); ++i) s += a[i];
    return s / static_cast<double>(a.numel());
}

inline Tensor clamped01(const Tensor& a) {
    Tensor out = a;
    for (std::size_t i = 0; i < out.numel(); ++i) {
        if (out[i] < 0.0) out[i] = 0.0;
        if (out[i] > 1.0) out[i] = 1.0;
    }
    return out;
}

}  // namespace ppgn
