#include "permknot/recursions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <utility>

namespace permknot {

namespace {

std::vector<int> flatten_raw(const std::vector<int>& w, int i) {
  const int n = static_cast<int>(w.size());
  const int wi = w[static_cast<std::size_t>(i - 1)];
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    const int v = (k < i) ? w[static_cast<std::size_t>(k - 1)] : w[static_cast<std::size_t>(k)];
    out.push_back(v < wi ? v : v - 1);
  }
  return out;
}

std::string pack_key(const std::vector<int>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(int));
}

std::vector<int> near_diagonal_positions(const std::vector<int>& w) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    if (std::abs(w[static_cast<std::size_t>(i - 1)] - i) <= 1) out.push_back(i);
  }
  return out;
}

}  // namespace

Permutation flatten(const Permutation& w, int i) {
  const int n = w.size();
  if (n < 2) {
    throw std::domain_error("flatten: a permutation of size 1 cannot be flattened (result would be in S_0)");
  }
  if (i < 1 || i > n) {
    throw std::out_of_range("flatten: position " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
  }
  return Permutation(Permutation::unchecked, flatten_raw(w.entries(), i));
}

HmStep hm_step(const Permutation& w) {
  const int n = w.size();
  if (n < 2) {
    throw std::domain_error("hm_step: no step exists for a permutation of size 1");
  }
  const std::vector<int>& e = w.entries();
  if (e[static_cast<std::size_t>(n - 1)] == n) {
    std::vector<int> parent(e.begin(), e.end() - 1);
    return HmStep{Permutation(Permutation::unchecked, std::move(parent)), n, n, HmCase::FixedTop};
  }
  const int k = e[static_cast<std::size_t>(n - 1)];
  int j = 0;
  for (int i = 1; i <= n; ++i) {
    if (e[static_cast<std::size_t>(i - 1)] == n) {
      j = i;
      break;
    }
  }
  std::vector<int> parent(e.begin(), e.end() - 1);
  parent[static_cast<std::size_t>(j - 1)] = k;
  return HmStep{Permutation(Permutation::unchecked, std::move(parent)), j, k, HmCase::Swap};
}

bool is_shallow_hm(const Permutation& w) {
  // Tail recursion unrolled into a loop; cur shrinks by one each pass.
  std::vector<int> cur = w.entries();
  while (cur.size() > 1) {
    const int n = static_cast<int>(cur.size());
    if (cur[static_cast<std::size_t>(n - 1)] == n) {
      cur.pop_back();
      continue;
    }
    const int k = cur[static_cast<std::size_t>(n - 1)];
    int j = 0;
    for (int i = 1; i <= n; ++i) {
      if (cur[static_cast<std::size_t>(i - 1)] == n) {
        j = i;
        break;
      }
    }
    cur[static_cast<std::size_t>(j - 1)] = k;
    cur.pop_back();
    // j must be a left-to-right maximum or a right-to-left minimum of the parent.
    bool ok = true;
    for (int i = 1; i < j; ++i) {
      if (cur[static_cast<std::size_t>(i - 1)] >= k) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ok = true;
      for (int i = j + 1; i <= n - 1; ++i) {
        if (cur[static_cast<std::size_t>(i - 1)] <= k) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_unlinked_cm(const Permutation& w, UnlinkCache& cache) {
  if (w.size() == 1) return true;
  auto& memo = cache.memo_;

  const std::string root_key = pack_key(w.entries());
  if (auto it = memo.find(root_key); it != memo.end()) return it->second;

  // Depth-first worklist. Child results are broadcast through the memo table:
  // a frame that resolves writes its key before popping, and its parent picks
  // the value up via pending_child on the next visit.
  struct Frame {
    std::vector<int> perm;
    std::string key;
    std::vector<int> candidates;  // positions i with |w(i) - i| <= 1, ascending
    std::size_t next = 0;
    std::string pending_child{};
  };

  std::vector<Frame> stack;
  stack.push_back(
      Frame{.perm = w.entries(), .key = root_key, .candidates = near_diagonal_positions(w.entries())});

  while (!stack.empty()) {
    Frame& f = stack.back();

    if (!f.pending_child.empty()) {
      const bool child_unlinked = memo.at(f.pending_child);
      f.pending_child.clear();
      if (child_unlinked) {
        memo.emplace(f.key, true);
        stack.pop_back();
        continue;
      }
    }

    bool advanced = false;
    while (f.next < f.candidates.size()) {
      const int i = f.candidates[f.next++];
      std::vector<int> child = flatten_raw(f.perm, i);
      if (child.size() == 1) {
        memo.emplace(f.key, true);
        stack.pop_back();
        advanced = true;
        break;
      }
      std::string child_key = pack_key(child);
      if (auto it = memo.find(child_key); it != memo.end()) {
        if (it->second) {
          memo.emplace(f.key, true);
          stack.pop_back();
          advanced = true;
          break;
        }
        continue;  // known linked, try the next candidate
      }
      f.pending_child = child_key;
      std::vector<int> cands = near_diagonal_positions(child);
      stack.push_back(
          Frame{.perm = std::move(child), .key = std::move(child_key), .candidates = std::move(cands)});
      advanced = true;
      break;
    }
    if (advanced) continue;

    // Every qualifying flattening is linked (or none exists).
    memo.emplace(f.key, false);
    stack.pop_back();
  }
  return memo.at(root_key);
}

bool is_unlinked_cm(const Permutation& w) {
  UnlinkCache cache;
  return is_unlinked_cm(w, cache);
}

namespace {

class ShallowEnumerator {
public:
  ShallowEnumerator(int target, const std::function<void(std::span<const int>)>& visit)
      : target_(target), visit_(visit), sufmin_(static_cast<std::size_t>(target) + 1) {
    current_.reserve(static_cast<std::size_t>(target));
  }

  void run() {
    current_.assign(1, 1);
    expand();
  }

private:
  void expand() {
    const int m = static_cast<int>(current_.size());
    if (m == target_) {
      visit_(std::span<const int>(current_));
      return;
    }

    // Child via the trailing fixed point m+1.
    current_.push_back(m + 1);
    expand();
    current_.pop_back();

    // Children via w(j) = m+1, w(m+1) = old value, for each eligible j.
    // Eligibility (left-to-right maximum or right-to-left minimum) is read
    // off a suffix-min array plus a running prefix max. The scratch array is
    // per depth, so recursion below does not clobber it.
    auto& sufmin = sufmin_[static_cast<std::size_t>(m)];
    sufmin.assign(static_cast<std::size_t>(m) + 2, 0);
    sufmin[static_cast<std::size_t>(m) + 1] = std::numeric_limits<int>::max();
    for (int j = m; j >= 1; --j) {
      sufmin[static_cast<std::size_t>(j)] =
          std::min(sufmin[static_cast<std::size_t>(j) + 1], current_[static_cast<std::size_t>(j - 1)]);
    }
    int prefmax = 0;
    for (int j = 1; j <= m; ++j) {
      const int v = current_[static_cast<std::size_t>(j - 1)];
      const bool eligible = (v > prefmax) || (v < sufmin[static_cast<std::size_t>(j) + 1]);
      if (v > prefmax) prefmax = v;
      if (!eligible) continue;
      current_.push_back(v);
      current_[static_cast<std::size_t>(j - 1)] = m + 1;
      expand();
      current_[static_cast<std::size_t>(j - 1)] = v;
      current_.pop_back();
    }
  }

  int target_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<int> current_;
  std::vector<std::vector<int>> sufmin_;
};

}  // namespace

void for_each_shallow(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) {
    throw std::invalid_argument("for_each_shallow: n must be at least 1");
  }
  ShallowEnumerator(n, visit).run();
}

std::vector<Permutation> generate_shallow(int n) {
  std::vector<Permutation> out;
  for_each_shallow(n, [&out](std::span<const int> w) {
    out.emplace_back(Permutation::unchecked, std::vector<int>(w.begin(), w.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The breadth-first search domain is all of S_n; n! states cap out here.
constexpr int kMaxBfsDomain = 9;

std::vector<std::int64_t> factorials(int n) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
  return f;
}

std::size_t lehmer_rank(const std::vector<int>& w, const std::vector<std::int64_t>& fact) {
  const int n = static_cast<int>(w.size());
  std::size_t r = 0;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int k = i + 1; k < n; ++k) {
      if (w[static_cast<std::size_t>(k)] < w[static_cast<std::size_t>(i)]) ++c;
    }
    r += static_cast<std::size_t>(c) * static_cast<std::size_t>(fact[static_cast<std::size_t>(n - 1 - i)]);
  }
  return r;
}

// Right-multiplying u by t_{ab} (0-based a < b) adds exactly
// length(t_{ab}) = 2(b-a)-1 inversions iff u[a] < u[b] and every entry
// between them lies strictly between u[a] and u[b].
bool swap_is_length_additive(const std::vector<int>& u, int a, int b) {
  const int lo = u[static_cast<std::size_t>(a)];
  const int hi = u[static_cast<std::size_t>(b)];
  if (lo >= hi) return false;
  for (int k = a + 1; k < b; ++k) {
    const int v = u[static_cast<std::size_t>(k)];
    if (v <= lo || v >= hi) return false;
  }
  return true;
}

constexpr std::size_t kNoStop = static_cast<std::size_t>(-1);

std::vector<std::int32_t> reduced_length_bfs(int n, std::size_t stop_rank) {
  const auto fact = factorials(n);
  const std::size_t total = static_cast<std::size_t>(fact[static_cast<std::size_t>(n)]);
  std::vector<std::int32_t> dist(total, -1);
  dist[0] = 0;
  if (stop_rank == 0) return dist;

  struct Node {
    std::vector<int> perm;
    std::int32_t d;
  };
  std::deque<Node> queue;
  std::vector<int> ident(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ident[static_cast<std::size_t>(i)] = i + 1;
  queue.push_back(Node{std::move(ident), 0});

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!swap_is_length_additive(node.perm, a, b)) continue;
        std::vector<int> v = node.perm;
        std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
        const std::size_t r = lehmer_rank(v, fact);
        if (dist[r] >= 0) continue;
        dist[r] = node.d + 1;
        if (r == stop_rank) return dist;
        queue.push_back(Node{std::move(v), node.d + 1});
      }
    }
  }
  return dist;
}

}  // namespace

std::int64_t reduced_reflection_length(const Permutation& w, int search_bound) {
  const int n = w.size();
  if (n > search_bound) {
    throw std::domain_error("reduced_reflection_length: size " + std::to_string(n) +
                            " exceeds the search bound " + std::to_string(search_bound));
  }
  if (n > kMaxBfsDomain) {
    throw std::domain_error("reduced_reflection_length: search space n! too large (n <= " +
                            std::to_string(kMaxBfsDomain) + ")");
  }
  const auto fact = factorials(n);
  const std::size_t target = lehmer_rank(w.entries(), fact);
  const auto dist = reduced_length_bfs(n, target);
  return dist[target];
}

ReducedReflectionTable::ReducedReflectionTable(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("ReducedReflectionTable: n must be at least 1");
  }
  if (n > kMaxBfsDomain) {
    throw std::domain_error("ReducedReflectionTable: state space n! too large (n <= " +
                            std::to_string(kMaxBfsDomain) + ")");
  }
  dist_ = reduced_length_bfs(n, kNoStop);
}

std::int64_t ReducedReflectionTable::operator()(const Permutation& w) const {
  if (w.size() != n_) {
    throw std::invalid_argument("ReducedReflectionTable: permutation size " +
                                std::to_string(w.size()) + " does not match table domain S_" +
                                std::to_string(n_));
  }
  return dist_[lehmer_rank(w.entries(), factorials(n_))];
}

}  // namespace permknot
