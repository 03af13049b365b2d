#include "braidquot/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "braidquot/error.hpp"

namespace braidquot {

struct Group::Data {
  ElementContext ctx;
  std::vector<Element> elems;
  std::unordered_map<Element, Eid, ElementHash> index;
  std::vector<Eid> gen_ids;
  std::vector<Eid> inv;

  // Lazily built under `mu`; node-based maps keep returned references valid
  // while other keys are added.
  mutable std::mutex mu;
  mutable std::unique_ptr<ConjClasses> classes;
  mutable std::vector<DynBitset> class_bits;
  mutable std::map<std::size_t, std::vector<Eid>> rep_cent;  // class -> C(rep)
  mutable std::map<Eid, std::pair<std::vector<Eid>, DynBitset>> cent;

  Eid lookup(const Element& e) const { return index.find(e)->second; }

  Eid product(Eid a, Eid b) const {
    return lookup(elem_compose(ctx, elems[a], elems[b]));
  }

  void build_classes_locked() const {
    if (classes) return;
    auto cc = std::make_unique<ConjClasses>();
    const Eid n = static_cast<Eid>(elems.size());
    const Eid unset = n;
    cc->class_of.assign(n, unset);
    cc->witness.assign(n, 0);
    for (Eid start = 0; start < n; ++start) {
      if (cc->class_of[start] != unset) continue;
      const Eid ci = static_cast<Eid>(cc->representative.size());
      cc->representative.push_back(start);
      std::vector<Eid> members{start};
      cc->class_of[start] = ci;
      cc->witness[start] = 0;  // identity conjugates rep onto itself
      // Orbit of `start` under conjugation by the generators.
      for (std::size_t head = 0; head < members.size(); ++head) {
        const Eid y = members[head];
        for (Eid g : gen_ids) {
          const Eid z = product(product(g, y), inv[g]);
          if (cc->class_of[z] != unset) continue;
          cc->class_of[z] = ci;
          cc->witness[z] = product(g, cc->witness[y]);
          members.push_back(z);
        }
      }
      std::sort(members.begin(), members.end());
      cc->members.push_back(std::move(members));
    }
    class_bits.reserve(cc->count());
    for (const auto& members : cc->members) {
      DynBitset bits(n);
      for (Eid m : members) bits.set(m);
      class_bits.push_back(std::move(bits));
    }
    classes = std::move(cc);
  }

  const std::vector<Eid>& rep_centralizer_locked(std::size_t ci) const {
    auto it = rep_cent.find(ci);
    if (it != rep_cent.end()) return it->second;
    const Eid r = classes->representative[ci];
    std::vector<Eid> c;
    const Eid n = static_cast<Eid>(elems.size());
    for (Eid x = 0; x < n; ++x)
      if (product(r, x) == product(x, r)) c.push_back(x);
    return rep_cent.emplace(ci, std::move(c)).first->second;
  }

  const std::pair<std::vector<Eid>, DynBitset>& centralizer_locked(Eid a) const {
    auto it = cent.find(a);
    if (it != cent.end()) return it->second;
    build_classes_locked();
    const std::size_t ci = classes->class_of[a];
    const auto& crep = rep_centralizer_locked(ci);
    const Eid u = classes->witness[a];
    const Eid ui = inv[u];
    std::vector<Eid> res;
    res.reserve(crep.size());
    for (Eid c : crep) res.push_back(product(product(u, c), ui));
    std::sort(res.begin(), res.end());
    DynBitset bits(elems.size());
    for (Eid x : res) bits.set(x);
    return cent.emplace(a, std::make_pair(std::move(res), std::move(bits)))
        .first->second;
  }
};

Group::Group() = default;
Group::Group(Group&&) noexcept = default;
Group& Group::operator=(Group&&) noexcept = default;
Group::~Group() = default;

Group Group::close(const ElementContext& ctx, std::vector<Element> generators,
                   std::uint64_t cap) {
  // Round-trip each generator so projective canonical form (and permutation
  // validity) is enforced regardless of how the caller packed it.
  for (Element& g : generators)
    g = ctx.kind == ElementContext::Kind::permutation ? pack(ctx, unpack_perm(ctx, g))
                                                      : pack(ctx, unpack_matrix(ctx, g));

  Group grp;
  grp.d_ = std::make_unique<Data>();
  Data& d = *grp.d_;
  d.ctx = ctx;

  const Element id = elem_identity(ctx);
  d.elems.push_back(id);
  d.index.emplace(id, 0);
  std::vector<Eid> frontier{0};
  while (!frontier.empty()) {
    // Collect the next level in packed byte order so ids are deterministic.
    std::set<Element> fresh;
    for (Eid x : frontier)
      for (const Element& g : generators) {
        Element y = elem_compose(ctx, d.elems[x], g);
        if (!d.index.contains(y)) fresh.insert(y);
      }
    frontier.clear();
    for (const Element& y : fresh) {
      if (d.elems.size() >= cap)
        throw CapExceeded("closure exceeded cap of " + std::to_string(cap) +
                          " elements");
      const Eid yid = static_cast<Eid>(d.elems.size());
      d.elems.push_back(y);
      d.index.emplace(y, yid);
      frontier.push_back(yid);
    }
  }

  d.gen_ids.reserve(generators.size());
  for (const Element& g : generators) d.gen_ids.push_back(d.lookup(g));

  d.inv.resize(d.elems.size());
  for (Eid x = 0; x < d.elems.size(); ++x)
    d.inv[x] = d.lookup(elem_inverse(ctx, d.elems[x]));

  return grp;
}

const ElementContext& Group::context() const { return d_->ctx; }
std::size_t Group::order() const { return d_->elems.size(); }
Eid Group::identity() const { return 0; }
const std::vector<Eid>& Group::generator_ids() const { return d_->gen_ids; }

const Element& Group::element(Eid id) const { return d_->elems[id]; }

std::optional<Eid> Group::find(const Element& e) const {
  auto it = d_->index.find(e);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::string Group::describe(Eid id) const {
  return elem_to_string(d_->ctx, d_->elems[id]);
}

Eid Group::product(Eid a, Eid b) const { return d_->product(a, b); }
Eid Group::inverse(Eid a) const { return d_->inv[a]; }

Eid Group::conjugate(Eid h, Eid x) const {
  return d_->product(d_->product(h, x), d_->inv[h]);
}

int Group::element_order(Eid a) const {
  int n = 1;
  Eid x = a;
  while (x != 0) {
    x = d_->product(x, a);
    ++n;
  }
  return n;
}

Eid Group::power(Eid a, long long e) const {
  if (e < 0) {
    a = d_->inv[a];
    e = -e;
  }
  Eid r = 0;
  while (e > 0) {
    if (e & 1) r = d_->product(r, a);
    a = d_->product(a, a);
    e >>= 1;
  }
  return r;
}

bool Group::commutes(Eid a, Eid b) const {
  return d_->product(a, b) == d_->product(b, a);
}

const ConjClasses& Group::conjugacy_classes() const {
  std::lock_guard<std::mutex> lock(d_->mu);
  d_->build_classes_locked();
  return *d_->classes;
}

const DynBitset& Group::class_bits(Eid class_index) const {
  std::lock_guard<std::mutex> lock(d_->mu);
  d_->build_classes_locked();
  return d_->class_bits[class_index];
}

const std::vector<Eid>& Group::centralizer(Eid a) const {
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->centralizer_locked(a).first;
}

const DynBitset& Group::centralizer_bits(Eid a) const {
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->centralizer_locked(a).second;
}

std::vector<Eid> Group::transporter(Eid a, Eid b) const {
  std::lock_guard<std::mutex> lock(d_->mu);
  d_->build_classes_locked();
  const auto& cc = *d_->classes;
  if (cc.class_of[a] != cc.class_of[b]) return {};
  const auto& crep = d_->rep_centralizer_locked(cc.class_of[a]);
  const Eid ub = cc.witness[b];
  const Eid uai = d_->inv[cc.witness[a]];
  std::vector<Eid> res;
  res.reserve(crep.size());
  for (Eid c : crep) res.push_back(d_->product(d_->product(ub, c), uai));
  std::sort(res.begin(), res.end());
  return res;
}

std::uint64_t Group::subgroup_order(std::span<const Eid> seed) const {
  DynBitset seen(d_->elems.size());
  std::vector<Eid> queue{0};
  seen.set(0);
  std::uint64_t count = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Eid s : seed) {
      const Eid y = d_->product(queue[head], s);
      if (seen.test(y)) continue;
      seen.set(y);
      ++count;
      queue.push_back(y);
    }
  return count;
}

}  // namespace braidquot
