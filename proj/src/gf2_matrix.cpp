// SPDX-License-Identifier: Apache-2.0
#include "casson3/gf2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace casson3 {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, std::vector<std::uint64_t>((cols + kBits - 1) / kBits, 0))
{
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const
{
	return (data_.at(r).at(c / kBits) >> (c % kBits)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v)
{
	if (c >= cols_)
		throw std::out_of_range("column out of range");
	auto &w = data_.at(r)[c / kBits];
	const std::uint64_t bit = std::uint64_t{1} << (c % kBits);
	w = v ? (w | bit) : (w & ~bit);
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src)
{
	auto &d = data_.at(dst);
	const auto &s = data_.at(src);
	for (std::size_t w = 0; w < d.size(); ++w)
		d[w] ^= s[w];
}

void Gf2Matrix::add_col(std::size_t dst, std::size_t src)
{
	if (dst >= cols_ || src >= cols_)
		throw std::out_of_range("column out of range");
	for (std::size_t r = 0; r < rows_; ++r)
		if (get(r, src))
			set(r, dst, !get(r, dst));
}

void Gf2Matrix::append_row()
{
	data_.emplace_back(words(), 0);
	++rows_;
}

void Gf2Matrix::append_col()
{
	++cols_;
	for (auto &row : data_)
		row.resize(words(), 0);
}

void Gf2Matrix::erase_row(std::size_t r)
{
	if (r >= rows_)
		throw std::out_of_range("row out of range");
	data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r));
	--rows_;
}

void Gf2Matrix::erase_col(std::size_t c)
{
	if (c >= cols_)
		throw std::out_of_range("column out of range");
	Gf2Matrix out(rows_, cols_ - 1);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t j = 0, k = 0; j < cols_; ++j)
			if (j != c)
				out.set(r, k++, get(r, j));
	*this = std::move(out);
}

bool Gf2Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(),
	                   [](const auto &row) { return std::all_of(row.begin(), row.end(), [](auto w) { return w == 0; }); });
}

std::size_t Gf2Matrix::rank() const
{
	auto m = data_;
	std::size_t rank = 0;
	for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
		const std::size_t w = c / kBits;
		const std::uint64_t bit = std::uint64_t{1} << (c % kBits);
		std::size_t pivot = rank;
		while (pivot < rows_ && !(m[pivot][w] & bit))
			++pivot;
		if (pivot == rows_)
			continue;
		std::swap(m[rank], m[pivot]);
		for (std::size_t r = 0; r < rows_; ++r)
			if (r != rank && (m[r][w] & bit))
				for (std::size_t k = 0; k < m[r].size(); ++k)
					m[r][k] ^= m[rank][k];
		++rank;
	}
	return rank;
}

Gf2Matrix Gf2Matrix::transpose() const
{
	Gf2Matrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (get(r, c))
				t.set(c, r, true);
	return t;
}

Gf2Matrix operator*(const Gf2Matrix &a, const Gf2Matrix &b)
{
	if (a.cols_ != b.rows_)
		throw std::invalid_argument("GF(2) matrix shapes do not compose");
	Gf2Matrix out(a.rows_, b.cols_);
	for (std::size_t r = 0; r < a.rows_; ++r)
		for (std::size_t k = 0; k < a.cols_; ++k)
			if (a.get(r, k))
				for (std::size_t w = 0; w < out.data_[r].size(); ++w)
					out.data_[r][w] ^= b.data_[k][w];
	return out;
}

std::string Gf2Matrix::str() const
{
	std::string s;
	for (std::size_t r = 0; r < rows_; ++r) {
		if (r)
			s += ';';
		for (std::size_t c = 0; c < cols_; ++c)
			s += get(r, c) ? '1' : '0';
	}
	return s;
}

} // namespace casson3
