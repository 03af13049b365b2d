// Concrete finite group handles: deterministic BFS closure from generators,
// dense element ids, conjugacy classes with per-element conjugating
// witnesses, cached centralizers, and transporter sets (cosets of a
// centralizer). Ids are stable across rebuilds of the same input: level 0 is
// the identity and each BFS frontier is sorted by packed byte order.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidquot/bitset.hpp"
#include "braidquot/element.hpp"

namespace braidquot {

using Eid = std::uint32_t;

inline constexpr std::uint64_t kDefaultClosureCap = 1'000'000;

struct ConjClasses {
  std::vector<Eid> class_of;              // element id -> class index
  std::vector<Eid> representative;        // class index -> minimal member id
  std::vector<std::vector<Eid>> members;  // class index -> sorted member ids
  // witness[x] conjugates the representative of x's class onto x:
  //   witness[x] * rep * witness[x]^-1 == x
  std::vector<Eid> witness;

  std::size_t count() const { return representative.size(); }
};

class Group {
 public:
  // Closes `generators` under composition. Throws CapExceeded (with the cap
  // in the message) if more than `cap` elements appear.
  static Group close(const ElementContext& ctx, std::vector<Element> generators,
                     std::uint64_t cap = kDefaultClosureCap);

  Group(Group&&) noexcept;
  Group& operator=(Group&&) noexcept;
  ~Group();
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const ElementContext& context() const;
  std::size_t order() const;
  Eid identity() const;
  const std::vector<Eid>& generator_ids() const;

  const Element& element(Eid id) const;
  std::optional<Eid> find(const Element& e) const;
  std::string describe(Eid id) const;  // elem_to_string shorthand

  Eid product(Eid a, Eid b) const;
  Eid inverse(Eid a) const;
  // h x h^-1
  Eid conjugate(Eid h, Eid x) const;
  int element_order(Eid a) const;
  Eid power(Eid a, long long e) const;

  bool commutes(Eid a, Eid b) const;

  // Lazily computed, cached, thread-safe.
  const ConjClasses& conjugacy_classes() const;
  const DynBitset& class_bits(Eid class_index) const;
  const std::vector<Eid>& centralizer(Eid a) const;        // sorted ids
  const DynBitset& centralizer_bits(Eid a) const;

  // {g : g a g^-1 == b}; empty unless a ~ b, else a left coset of the
  // centralizer of a (|T| == |C(a)|). Sorted.
  std::vector<Eid> transporter(Eid a, Eid b) const;

  // Order of the subgroup generated by `seed` (closure over ids).
  std::uint64_t subgroup_order(std::span<const Eid> seed) const;

 private:
  Group();
  struct Data;
  std::unique_ptr<Data> d_;
};

}  // namespace braidquot
