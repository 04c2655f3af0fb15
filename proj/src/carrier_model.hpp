#pragma once

#include <random>
#include <string>
#include <vector>

#include "cucalc/carriers.hpp"

namespace cucalc::detail {

class CarrierModel {
 public:
  virtual ~CarrierModel() = default;

  virtual CarrierKind kind() const = 0;
  virtual std::size_t dim() const { return 1; }
  virtual std::string name() const = 0;
  virtual bool contains(const Element& a) const = 0;
  virtual Element zero() const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual bool leq(const Element& a, const Element& b) const = 0;
  virtual bool way_below(const Element& a, const Element& b) const = 0;
  virtual bool is_soft(const Element& a) const = 0;
  virtual Element multiple(const ExtNat& n, const Element& a) const = 0;
  virtual ElementChain refine(const Element& a) const = 0;
  virtual Element extend(const ElementChain& c, std::size_t k) const = 0;
  virtual Element limit(const ElementChain& c) const = 0;
  virtual std::vector<Element> grid() const = 0;
  virtual Element random(std::mt19937_64& rng) const = 0;
  virtual std::string format(const Element& a) const = 0;
  virtual const FiniteTable* table() const { return nullptr; }
};

}  // namespace cucalc::detail
