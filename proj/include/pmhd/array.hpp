//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file array.hpp
//  \brief dense 3D/4D field arrays templated on the scalar type
//
//  Storage order is k-j-i with i fastest (row-major in the nested-loop sense);
//  4D arrays add a slowest variable index, so one variable's block is contiguous.

#ifndef PMHD_ARRAY_HPP_
#define PMHD_ARRAY_HPP_

#include <cstddef>
#include <vector>

namespace pmhd {

template <typename T>
class Array3 {
 public:
  Array3() = default;
  Array3(int n3, int n2, int n1) { resize(n3, n2, n1); }

  void resize(int n3, int n2, int n1) {
    n3_ = n3; n2_ = n2; n1_ = n1;
    data_.assign(static_cast<std::size_t>(n3) * n2 * n1, T(0));
  }

  T& operator()(int k, int j, int i) {
    return data_[(static_cast<std::size_t>(k) * n2_ + j) * n1_ + i];
  }
  const T& operator()(int k, int j, int i) const {
    return data_[(static_cast<std::size_t>(k) * n2_ + j) * n1_ + i];
  }

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int n3() const { return n3_; }
  std::size_t size() const { return data_.size(); }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  void fill(T v) { data_.assign(data_.size(), v); }

 private:
  int n3_ = 0, n2_ = 0, n1_ = 0;
  std::vector<T> data_;
};

template <typename T>
class Array4 {
 public:
  Array4() = default;
  Array4(int nv, int n3, int n2, int n1) { resize(nv, n3, n2, n1); }

  void resize(int nv, int n3, int n2, int n1) {
    nv_ = nv; n3_ = n3; n2_ = n2; n1_ = n1;
    data_.assign(static_cast<std::size_t>(nv) * n3 * n2 * n1, T(0));
  }

  T& operator()(int v, int k, int j, int i) {
    return data_[((static_cast<std::size_t>(v) * n3_ + k) * n2_ + j) * n1_ + i];
  }
  const T& operator()(int v, int k, int j, int i) const {
    return data_[((static_cast<std::size_t>(v) * n3_ + k) * n2_ + j) * n1_ + i];
  }

  int nv() const { return nv_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int n3() const { return n3_; }
  std::size_t size() const { return data_.size(); }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  void fill(T v) { data_.assign(data_.size(), v); }

 private:
  int nv_ = 0, n3_ = 0, n2_ = 0, n1_ = 0;
  std::vector<T> data_;
};

} // namespace pmhd

#endif // PMHD_ARRAY_HPP_
