#pragma once

#include <memory>
#include <vector>

#include "cayley/common.hpp"
#include "cayley/group.hpp"
#include "cayley/hom.hpp"

namespace cayley {

/// The group Z_m^k x| K, where K permutes the k coordinates through a hom into
/// coordinate permutations. Elements are pairs (x; y) with x a coordinate
/// tuple and y in K; products are computed on the fly (orders reach well past
/// table range):
///
///   (x1; y1)(x2; y2) = (x1 permuted by phi(y2), plus x2 componentwise; y1*y2)
class SemidirectPowerGroup {
public:
  SemidirectPowerGroup(unsigned m, int k, std::shared_ptr<const TableGroup> K, GroupHom phi)
      : m_(m), k_(k), K_(std::move(K)), phi_(std::move(phi)) {
    require(m_ >= 2, errc::invalid_input, "coordinate modulus must be at least 2");
    require(k_ >= 1 && k_ <= 64, errc::invalid_input, "coordinate count out of range");
    require(phi_.source.get() == K_.get(), errc::invalid_input, "hom source mismatch");
    require(phi_.arity == k_, errc::invalid_input, "hom arity mismatch");
    mk_ = 1;
    for (int i = 0; i < k_; ++i) {
      mk_ *= m_;
      require(mk_ * K_->order() <= (1ull << 31), errc::invalid_input, "group too large");
    }
    order_ = mk_ * K_->order();
  }

  std::uint64_t order() const { return order_; }
  unsigned modulus() const { return m_; }
  int arity() const { return k_; }
  const TableGroup& kgroup() const { return *K_; }
  const std::shared_ptr<const TableGroup>& kgroup_ptr() const { return K_; }
  const GroupHom& hom() const { return phi_; }

  elem_t encode(const std::vector<unsigned>& x, elem_t y) const {
    std::uint64_t code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * m_ + x[static_cast<std::size_t>(i)];
    return static_cast<elem_t>(code * K_->order() + y);
  }

  void decode(elem_t e, std::vector<unsigned>& x, elem_t& y) const {
    y = static_cast<elem_t>(e % K_->order());
    std::uint64_t code = e / K_->order();
    x.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<unsigned>(code % m_);
      code /= m_;
    }
  }

  elem_t mul(elem_t a, elem_t b) const {
    elem_t y1 = static_cast<elem_t>(a % K_->order());
    elem_t y2 = static_cast<elem_t>(b % K_->order());
    std::uint64_t c1 = a / K_->order();
    std::uint64_t c2 = b / K_->order();
    const CoordPerm& p = phi_.of(y2);
    unsigned out[64];
    for (int i = 0; i < k_; ++i) {
      out[i] = static_cast<unsigned>(c2 % m_);
      c2 /= m_;
    }
    for (int i = 0; i < k_; ++i) {
      unsigned digit = static_cast<unsigned>(c1 % m_);
      c1 /= m_;
      unsigned& slot = out[p.map[static_cast<std::size_t>(i)]];
      slot = (slot + digit) % m_;
    }
    std::uint64_t code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * m_ + out[i];
    return static_cast<elem_t>(code * K_->order() + K_->mul(y1, y2));
  }

  elem_t inv(elem_t a) const {
    elem_t y = static_cast<elem_t>(a % K_->order());
    std::uint64_t c = a / K_->order();
    elem_t yi = K_->inv(y);
    const CoordPerm& p = phi_.of(yi);
    unsigned out[64] = {};
    for (int i = 0; i < k_; ++i) {
      unsigned digit = static_cast<unsigned>(c % m_);
      c /= m_;
      out[p.map[static_cast<std::size_t>(i)]] = (m_ - digit) % m_;
    }
    std::uint64_t code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * m_ + out[i];
    return static_cast<elem_t>(code * K_->order() + yi);
  }

private:
  unsigned m_;
  int k_;
  std::shared_ptr<const TableGroup> K_;
  GroupHom phi_;
  std::uint64_t mk_ = 0;
  std::uint64_t order_ = 0;
};

static_assert(GroupLike<SemidirectPowerGroup>);

/// Z_m^k x| K through phi; orders m^k * |K|.
inline SemidirectPowerGroup build_semidirect(unsigned m, int k,
                                             std::shared_ptr<const TableGroup> K, GroupHom phi) {
  return SemidirectPowerGroup(m, k, std::move(K), std::move(phi));
}

}  // namespace cayley
