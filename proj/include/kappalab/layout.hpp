#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappalab {

/// Ordered list of local dimensions, one per subsystem. Subsystem 0 is the
/// most significant digit of the composite basis index, i.e. basis index
/// b = d_1 d_2 ... d_m in mixed radix, leftmost factor first (matching the
/// usual Kronecker-product convention).
class SubsystemLayout {
 public:
  static constexpr long kDefaultDimCap = 4096;

  explicit SubsystemLayout(std::vector<int> dims, long dim_cap = kDefaultDimCap)
      : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("layout: empty dims");
    total_dim_ = 1;
    for (int d : dims_) {
      if (d < 2) throw std::invalid_argument("layout: every dim must be >= 2");
      if (total_dim_ > dim_cap / d)
        throw std::invalid_argument("layout: total dimension exceeds cap " +
                                    std::to_string(dim_cap));
      total_dim_ *= d;
    }
  }

  static SubsystemLayout qubits(int n, long dim_cap = kDefaultDimCap) {
    if (n < 1) throw std::invalid_argument("layout: need at least one qubit");
    return SubsystemLayout(std::vector<int>(static_cast<size_t>(n), 2), dim_cap);
  }

  int size() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_.at(static_cast<size_t>(i)); }
  const std::vector<int>& dims() const { return dims_; }
  long total_dim() const { return total_dim_; }

  bool all_qubits() const {
    for (int d : dims_)
      if (d != 2) return false;
    return true;
  }

  /// Place value of subsystem i: the stride its digit contributes to the
  /// composite index.
  long stride(int i) const {
    long s = 1;
    for (int j = i + 1; j < size(); ++j) s *= dims_[static_cast<size_t>(j)];
    return s;
  }

  std::vector<int> decompose(long index) const {
    std::vector<int> digits(dims_.size());
    for (int i = size() - 1; i >= 0; --i) {
      int d = dims_[static_cast<size_t>(i)];
      digits[static_cast<size_t>(i)] = static_cast<int>(index % d);
      index /= d;
    }
    return digits;
  }

  long compose(const std::vector<int>& digits) const {
    long index = 0;
    for (int i = 0; i < size(); ++i)
      index = index * dims_[static_cast<size_t>(i)] + digits[static_cast<size_t>(i)];
    return index;
  }

  bool operator==(const SubsystemLayout& o) const { return dims_ == o.dims_; }
  bool operator!=(const SubsystemLayout& o) const { return !(*this == o); }

 private:
  std::vector<int> dims_;
  long total_dim_ = 0;
};

/// Strictly increasing set of subsystem indices (0-based internally;
/// user-facing I/O is 1-based).
class QubitSubset {
 public:
  QubitSubset(std::vector<int> indices, const SubsystemLayout& layout)
      : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("subset: empty");
    for (size_t i = 0; i < indices_.size(); ++i) {
      int idx = indices_[i];
      if (idx < 0 || idx >= layout.size())
        throw std::invalid_argument("subset: index out of range");
      if (i > 0 && indices_[i - 1] >= idx)
        throw std::invalid_argument("subset: indices must be strictly increasing");
    }
  }

  static QubitSubset from_mask(std::uint32_t mask, const SubsystemLayout& layout) {
    std::vector<int> idx;
    for (int i = 0; i < layout.size(); ++i)
      if (mask & (1u << i)) idx.push_back(i);
    return QubitSubset(std::move(idx), layout);
  }

  std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int i : indices_) m |= (1u << i);
    return m;
  }

  int size() const { return static_cast<int>(indices_.size()); }
  int index(int i) const { return indices_.at(static_cast<size_t>(i)); }
  const std::vector<int>& indices() const { return indices_; }

  bool contains(int idx) const {
    for (int i : indices_)
      if (i == idx) return true;
    return false;
  }

  /// "1,2,5" with 1-based indices, for reports.
  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < indices_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(indices_[i] + 1);
    }
    return s;
  }

  bool operator==(const QubitSubset& o) const { return indices_ == o.indices_; }

 private:
  std::vector<int> indices_;
};

}  // namespace kappalab
