// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace casson3 {

/// Dense matrix over GF(2) with bit-packed rows.
class Gf2Matrix {
public:
	Gf2Matrix() = default;
	Gf2Matrix(std::size_t rows, std::size_t cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	bool get(std::size_t r, std::size_t c) const;
	void set(std::size_t r, std::size_t c, bool v);

	/// row[dst] += row[src]
	void add_row(std::size_t dst, std::size_t src);
	/// col[dst] += col[src]
	void add_col(std::size_t dst, std::size_t src);

	void append_row();
	void append_col();
	void erase_row(std::size_t r);
	void erase_col(std::size_t c);

	bool is_zero() const;
	/// Rank by Gaussian elimination on a copy.
	std::size_t rank() const;
	Gf2Matrix transpose() const;

	friend Gf2Matrix operator*(const Gf2Matrix &a, const Gf2Matrix &b);
	friend bool operator==(const Gf2Matrix &, const Gf2Matrix &) = default;

	/// Rows as strings of '0'/'1', separated by ';'.
	std::string str() const;

private:
	static constexpr std::size_t kBits = 64;
	std::size_t words() const { return (cols_ + kBits - 1) / kBits; }

	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<std::vector<std::uint64_t>> data_;
};

} // namespace casson3
