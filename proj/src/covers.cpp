#include "spinal/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "spinal/error.hpp"

namespace spinal {

Partition normalized(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

Partition cycle_type(const Permutation& p) {
  const int k = static_cast<int>(p.size());
  std::vector<bool> seen(k, false);
  Partition type;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    type.push_back(len);
  }
  return normalized(std::move(type));
}

bool riemann_hurwitz_unbranched_ok(const Surface& base, int k, const Surface& candidate_total) {
  return candidate_total.euler() == k * base.euler();
}

namespace {

Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
  return out;
}

Permutation inverse(const Permutation& x) {
  Permutation out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[x[i]] = static_cast<int>(i);
  return out;
}

// Canonical representative of a cycle type: consecutive blocks, each cycle
// mapping i -> i+1 within its block.
Permutation canonical_element(int k, const Partition& type) {
  Permutation p(k);
  int start = 0;
  for (int len : type) {
    for (int j = 0; j < len; ++j) p[start + j] = start + (j + 1) % len;
    start += len;
  }
  return p;
}

// The symmetric group S_k with its elements in lexicographic order, together
// with the lattice of set partitions of {0..k-1} used to track orbits.
class GroupTables {
 public:
  explicit GroupTables(int k) : k_(k) {
    Permutation p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      index_[encode(p)] = static_cast<int>(elements_.size());
      elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = size();
    mul_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) mul_[a * n + b] = index_of(compose(elements_[a], elements_[b]));
    }
    inv_.resize(n);
    for (int a = 0; a < n; ++a) inv_[a] = index_of(inverse(elements_[a]));

    build_partitions();
    orbit_part_.resize(n);
    for (int a = 0; a < n; ++a) orbit_part_[a] = orbits_of(elements_[a]);
  }

  int k() const { return k_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int identity() const { return 0; }
  const Permutation& element(int i) const { return elements_[i]; }
  int index_of(const Permutation& p) const { return index_.at(encode(p)); }
  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int inv(int a) const { return inv_[a]; }

  int partition_count() const { return static_cast<int>(partitions_.size()); }
  int full_partition() const { return full_; }
  int orbit_partition(int element) const { return orbit_part_[element]; }
  int join(int p, int q) const { return join_[p * partition_count() + q]; }

 private:
  long long encode(const Permutation& p) const {
    long long code = 0;
    for (int x : p) code = code * 16 + x;
    return code;
  }

  static std::vector<int> restricted_growth(const std::vector<int>& block_of) {
    std::vector<int> relabel(block_of.size(), -1);
    std::vector<int> out(block_of.size());
    int next = 0;
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      int& r = relabel[block_of[i]];
      if (r < 0) r = next++;
      out[i] = r;
    }
    return out;
  }

  void build_partitions() {
    // Enumerate restricted growth strings of length k.
    std::vector<int> rgs(k_, 0);
    std::function<void(int, int)> rec = [&](int pos, int max_block) {
      if (pos == k_) {
        partition_index_[rgs] = static_cast<int>(partitions_.size());
        partitions_.push_back(rgs);
        return;
      }
      for (int b = 0; b <= max_block + 1; ++b) {
        rgs[pos] = b;
        rec(pos + 1, std::max(max_block, b));
      }
    };
    if (k_ == 0) return;
    rgs[0] = 0;
    rec(1, 0);
    full_ = partition_index_.at(std::vector<int>(k_, 0));

    const int n = partition_count();
    join_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        std::vector<int> parent(k_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        for (int i = 0; i < k_; ++i) {
          for (int j = i + 1; j < k_; ++j) {
            if (partitions_[p][i] == partitions_[p][j] || partitions_[q][i] == partitions_[q][j]) {
              parent[find(i)] = find(j);
            }
          }
        }
        std::vector<int> block(k_);
        for (int i = 0; i < k_; ++i) block[i] = find(i);
        join_[p * n + q] = partition_index_.at(restricted_growth(block));
      }
    }
  }

  int orbits_of(const Permutation& p) const {
    std::vector<int> block(k_, -1);
    for (int i = 0; i < k_; ++i) {
      if (block[i] >= 0) continue;
      for (int x = i; block[x] < 0; x = p[x]) block[x] = i;
    }
    return partition_index_.at(restricted_growth(block));
  }

  int k_;
  std::vector<Permutation> elements_;
  std::map<long long, int> index_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> partitions_;
  std::map<std::vector<int>, int> partition_index_;
  std::vector<int> join_;
  std::vector<int> orbit_part_;
  int full_ = 0;
};

struct Move {
  int element;
  int partition;
};

enum class LayerKind { Boundary, Handle, Branch };

struct Layer {
  LayerKind kind;
  std::vector<Move> moves;           // distinct effects, used for the reachability sweeps
  std::vector<int> members;          // Boundary: class members in index order
};

class CoverSearch {
 public:
  CoverSearch(const CoverSpec& spec, const GroupTables& g) : spec_(spec), g_(g) {
    const int k = spec.degree;
    const Permutation c1 = canonical_element(k, normalized(spec.boundary_types.front()));
    const int c1_index = g.index_of(c1);
    start_ = state(c1_index, g.orbit_partition(c1_index));
    c1_ = c1_index;

    std::map<Partition, std::vector<int>> classes;
    for (int e = 0; e < g.size(); ++e) classes[cycle_type(g.element(e))].push_back(e);

    for (std::size_t j = 1; j < spec.boundary_types.size(); ++j) {
      Layer layer{LayerKind::Boundary, {}, classes[normalized(spec.boundary_types[j])]};
      for (int e : layer.members) layer.moves.push_back({e, g.orbit_partition(e)});
      fixed_layers_.push_back(std::move(layer));
    }

    Layer handle{LayerKind::Handle, {}, {}};
    std::map<std::pair<int, int>, bool> effects;
    for (int a = 0; a < g.size(); ++a) {
      for (int b = 0; b < g.size(); ++b) {
        const int comm = commutator(a, b);
        const int part = g.join(g.orbit_partition(a), g.orbit_partition(b));
        if (effects.emplace(std::make_pair(comm, part), true).second) {
          handle.moves.push_back({comm, part});
        }
      }
    }
    for (int i = 0; i < spec.base.genus(); ++i) fixed_layers_.push_back(handle);

    for (int e = 0; e < g.size(); ++e) {
      if (cycle_type(g.element(e)).front() == 2 && cycle_type(g.element(e)).size() ==
                                                        static_cast<std::size_t>(k - 1)) {
        transpositions_.push_back(e);
        branch_.moves.push_back({e, g.orbit_partition(e)});
      }
    }
    branch_.kind = LayerKind::Branch;
  }

  CoverResult run() {
    std::vector<std::vector<char>> forward;
    forward.push_back(singleton(start_));
    for (const auto& layer : fixed_layers_) forward.push_back(advance(forward.back(), layer));

    // Branch points: breadth-first over transposition layers.
    int needed = -1;
    std::vector<char> frontier = forward.back();
    const int limit = spec_.unbranched ? 0 : 3 * spec_.degree + 3;
    std::vector<std::vector<char>> branch_frontiers{frontier};
    for (int steps = 0; steps <= limit; ++steps) {
      if (intersects_accept(frontier)) {
        needed = steps;
        break;
      }
      if (steps == limit || transpositions_.empty()) break;
      frontier = advance(frontier, branch_);
      branch_frontiers.push_back(frontier);
    }

    CoverResult result;
    if (needed < 0) return result;
    int branching = needed;
    if (spec_.total) {
      const int forced = spec_.degree * spec_.base.euler() - spec_.total->euler();
      if (forced < needed || (forced - needed) % 2 != 0) return result;
      if (spec_.unbranched && forced != 0) return result;
      // Degree 1 has no transpositions to pad with.
      if (forced > needed && transpositions_.empty()) return result;
      branching = forced;
    }

    std::vector<Layer> layers = fixed_layers_;
    for (int i = 0; i < needed; ++i) layers.push_back(branch_);
    for (int i = 0; i < needed; ++i) forward.push_back(branch_frontiers[i + 1]);

    CoverCertificate cert = reconstruct(layers, forward);
    for (int i = needed; i < branching; i += 2) {
      cert.branch.push_back(g_.element(transpositions_.front()));
      cert.branch.push_back(g_.element(transpositions_.front()));
    }

    result.exists = true;
    result.branching = branching;
    if (transitive(cert)) {
      int boundary = 0;
      for (const auto& t : spec_.boundary_types) boundary += static_cast<int>(t.size());
      result.cover_type =
          orientable_from_euler(spec_.degree * spec_.base.euler() - branching, boundary);
    }
    result.certificate = std::move(cert);
    return result;
  }

 private:
  int state(int element, int partition) const {
    return element * g_.partition_count() + partition;
  }
  int state_element(int s) const { return s / g_.partition_count(); }
  int state_partition(int s) const { return s % g_.partition_count(); }
  int state_count() const { return g_.size() * g_.partition_count(); }

  int step(int s, const Move& m) const {
    return state(g_.mul(state_element(s), m.element), g_.join(state_partition(s), m.partition));
  }

  int commutator(int a, int b) const {
    return g_.mul(g_.mul(a, b), g_.mul(g_.inv(a), g_.inv(b)));
  }

  bool accepting(int s) const {
    return state_element(s) == g_.identity() &&
           (!spec_.require_connected || state_partition(s) == g_.full_partition());
  }

  std::vector<char> singleton(int s) const {
    std::vector<char> set(state_count(), 0);
    set[s] = 1;
    return set;
  }

  std::vector<char> advance(const std::vector<char>& from, const Layer& layer) const {
    std::vector<char> to(state_count(), 0);
    for (int s = 0; s < state_count(); ++s) {
      if (!from[s]) continue;
      for (const auto& m : layer.moves) to[step(s, m)] = 1;
    }
    return to;
  }

  bool intersects_accept(const std::vector<char>& set) const {
    for (int s = 0; s < state_count(); ++s) {
      if (set[s] && accepting(s)) return true;
    }
    return false;
  }

  // Walks the layers choosing, at each step, the smallest generator that keeps
  // an accepting state reachable.
  CoverCertificate reconstruct(const std::vector<Layer>& layers,
                               const std::vector<std::vector<char>>& forward) const {
    const std::size_t n = layers.size();
    std::vector<std::vector<char>> good(n + 1, std::vector<char>(state_count(), 0));
    for (int s = 0; s < state_count(); ++s) good[n][s] = forward[n][s] && accepting(s);
    for (std::size_t l = n; l-- > 0;) {
      for (int s = 0; s < state_count(); ++s) {
        if (!forward[l][s]) continue;
        for (const auto& m : layers[l].moves) {
          if (good[l + 1][step(s, m)]) {
            good[l][s] = 1;
            break;
          }
        }
      }
    }

    CoverCertificate cert;
    cert.boundary.push_back(g_.element(c1_));
    int s = start_;
    for (std::size_t l = 0; l < n; ++l) {
      const Layer& layer = layers[l];
      bool advanced = false;
      if (layer.kind == LayerKind::Handle) {
        for (int a = 0; a < g_.size() && !advanced; ++a) {
          for (int b = 0; b < g_.size() && !advanced; ++b) {
            const Move m{commutator(a, b), g_.join(g_.orbit_partition(a), g_.orbit_partition(b))};
            if (good[l + 1][step(s, m)]) {
              s = step(s, m);
              cert.handles.emplace_back(g_.element(a), g_.element(b));
              advanced = true;
            }
          }
        }
      } else {
        const std::vector<int>& options =
            layer.kind == LayerKind::Boundary ? layer.members : transpositions_;
        for (int e : options) {
          const Move m{e, g_.orbit_partition(e)};
          if (good[l + 1][step(s, m)]) {
            s = step(s, m);
            (layer.kind == LayerKind::Boundary ? cert.boundary : cert.branch)
                .push_back(g_.element(e));
            advanced = true;
            break;
          }
        }
      }
      if (!advanced) throw InternalInconsistency("cover certificate reconstruction failed");
    }
    return cert;
  }

  bool transitive(const CoverCertificate& cert) const {
    int part = -1;
    auto fold = [&](const Permutation& p) {
      const int q = g_.orbit_partition(g_.index_of(p));
      part = part < 0 ? q : g_.join(part, q);
    };
    for (const auto& c : cert.boundary) fold(c);
    for (const auto& [a, b] : cert.handles) {
      fold(a);
      fold(b);
    }
    for (const auto& t : cert.branch) fold(t);
    return part == g_.full_partition();
  }

  const CoverSpec& spec_;
  const GroupTables& g_;
  int start_ = 0;
  int c1_ = 0;
  std::vector<Layer> fixed_layers_;
  Layer branch_{LayerKind::Branch, {}, {}};
  std::vector<int> transpositions_;
};

void check_spec(const CoverSpec& spec, const SearchBounds& bounds) {
  if (!spec.base.is_orientable() || spec.base.boundary() < 1) {
    throw PreconditionError("cover base must be orientable with nonempty boundary");
  }
  if (spec.degree < 1) throw PreconditionError("cover degree must be positive");
  if (static_cast<int>(spec.boundary_types.size()) != spec.base.boundary()) {
    throw PreconditionError("need one boundary cycle type per boundary circle of the base");
  }
  for (const auto& type : spec.boundary_types) {
    int sum = 0;
    for (int part : type) {
      if (part < 1) throw PreconditionError("cycle type parts must be positive");
      sum += part;
    }
    if (sum != spec.degree) {
      throw PreconditionError("boundary cycle type does not sum to the degree");
    }
  }
  if (spec.degree > bounds.max_degree) {
    throw SearchBoundExceeded("degree " + std::to_string(spec.degree) + " > " +
                              std::to_string(bounds.max_degree));
  }
  if (spec.base.genus() > bounds.max_genus) {
    throw SearchBoundExceeded("base genus " + std::to_string(spec.base.genus()) + " > " +
                              std::to_string(bounds.max_genus));
  }
  if (bounds.max_degree > 6) {
    throw PreconditionError("brute-force degree bound is capped at 6");
  }
}

}  // namespace

CoverResult exists_cover(const CoverSpec& spec, const SearchBounds& bounds) {
  check_spec(spec, bounds);
  if (spec.total) {
    int boundary = 0;
    for (const auto& t : spec.boundary_types) boundary += static_cast<int>(t.size());
    if (!spec.total->is_orientable() || spec.total->boundary() != boundary) return {};
  }
  const GroupTables tables(spec.degree);
  return CoverSearch(spec, tables).run();
}

bool certificate_satisfies(const CoverSpec& spec, const CoverCertificate& cert) {
  const int k = spec.degree;
  auto is_perm = [k](const Permutation& p) {
    if (static_cast<int>(p.size()) != k) return false;
    std::vector<bool> seen(k, false);
    for (int x : p) {
      if (x < 0 || x >= k || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (cert.boundary.size() != spec.boundary_types.size()) return false;
  if (static_cast<int>(cert.handles.size()) != spec.base.genus()) return false;
  if (spec.unbranched && !cert.branch.empty()) return false;

  Permutation product(k);
  std::iota(product.begin(), product.end(), 0);
  std::vector<const Permutation*> generators;
  for (std::size_t j = 0; j < cert.boundary.size(); ++j) {
    const auto& c = cert.boundary[j];
    if (!is_perm(c) || cycle_type(c) != normalized(spec.boundary_types[j])) return false;
    product = compose(product, c);
    generators.push_back(&c);
  }
  for (const auto& [a, b] : cert.handles) {
    if (!is_perm(a) || !is_perm(b)) return false;
    product = compose(compose(compose(compose(product, a), b), inverse(a)), inverse(b));
    generators.push_back(&a);
    generators.push_back(&b);
  }
  for (const auto& t : cert.branch) {
    const Partition type = cycle_type(t);
    if (!is_perm(t) || type.front() != 2 || static_cast<int>(type.size()) != k - 1) return false;
    product = compose(product, t);
    generators.push_back(&t);
  }
  for (int i = 0; i < k; ++i) {
    if (product[i] != i) return false;
  }
  if (spec.require_connected) {
    std::vector<bool> reached(k, false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto* g : generators) {
        const int y = (*g)[x];
        if (!reached[y]) {
          reached[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;
  }
  return true;
}

}  // namespace spinal
