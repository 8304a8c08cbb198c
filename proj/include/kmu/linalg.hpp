#pragma once

#include <vector>

#include "kmu/scalar.hpp"

namespace kmu {

// Dense exact matrix, just enough for rank/kernel computations at desk scale.
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols, Field f)
        : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // in-place reduced row echelon form; returns pivot columns
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            Scalar inv = at(r, c).inverse();
            for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Scalar factor = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= factor * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        ScalarMatrix copy = *this;
        return copy.rref().size();
    }

    // basis of the right kernel, deterministic order (free columns ascending)
    std::vector<std::vector<Scalar>> kernel_basis() const {
        ScalarMatrix copy = *this;
        auto pivots = copy.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (auto c : pivots) is_pivot[c] = 1;
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<Scalar> v(cols_, Scalar::zero(field_));
            v[free_col] = Scalar::one(field_);
            for (std::size_t pr = 0; pr < pivots.size(); ++pr)
                v[pivots[pr]] = -copy.at(pr, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

}  // namespace kmu
