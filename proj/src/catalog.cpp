#include "mlat/catalog.hpp"

#include <atomic>
#include <charconv>
#include <thread>

#include "mlat/error.hpp"
#include "mlat/zn.hpp"

namespace mlat {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

MultLattice with_meet(FiniteLattice l) {
  MultTable t = MultTable::meet_of(l);
  return classify_multiplication(std::move(l), std::move(t));
}

std::optional<std::size_t> call_argument(std::string_view name, std::string_view fn) {
  if (name.size() <= fn.size() + 2 || name.substr(0, fn.size()) != fn || name[fn.size()] != '(' || name.back() != ')') {
    return std::nullopt;
  }
  const std::string_view digits = name.substr(fn.size() + 1, name.size() - fn.size() - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

MultLattice n5_meet() {
  const Covers covers{{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}};
  return with_meet(build_lattice("N5", {"0", "a", "b", "c", "1"}, covers));
}

MultLattice figure3_k() {
  const Covers covers{{"0", "a"}, {"a", "b"}, {"b", "d"}, {"0", "c"}, {"c", "d"}, {"d", "1"}};
  FiniteLattice l = build_lattice("K", {"0", "a", "b", "c", "d", "1"}, covers);
  const std::size_t n = l.size();
  std::vector<Element> cells(n * n, l.bottom());
  for (Element x = 0; x < n; ++x) {
    cells[l.top() * n + x] = x;
    cells[x * n + l.top()] = x;
  }
  MultTable t(n, std::move(cells));
  return classify_multiplication(std::move(l), std::move(t));
}

MultLattice chain_lattice(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::BadParams, "a chain needs at least 2 elements");
  if (k > kMaxElements) throw Error(ErrorCode::TooManyElements, "chain is too long");
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < k; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("1");
  Covers covers;
  for (std::size_t i = 0; i + 1 < k; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return with_meet(build_lattice("chain(" + std::to_string(k) + ")", labels, covers));
}

MultLattice boolean_lattice(std::size_t k) {
  if (k < 1 || k > 6) throw Error(ErrorCode::BadParams, "boolean(k) needs 1 <= k <= 6");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string label;
    for (std::size_t a = 0; a < k; ++a) {
      if ((mask >> a) & 1U) label += static_cast<char>('a' + a);
    }
    if (mask == 0) label = "0";
    if (mask == n - 1) label = "1";
    labels.push_back(label);
  }
  std::vector<bool> leq(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = (x & ~y) == 0;
  }
  return with_meet(FiniteLattice::from_order("boolean(" + std::to_string(k) + ")", labels, leq));
}

MultLattice builtin(std::string_view name) {
  if (name == "n5_meet") return n5_meet();
  if (name == "figure3_K") return figure3_k();
  if (name == "idz12") return ideal_lattice(12);
  if (auto k = call_argument(name, "chain")) return chain_lattice(*k);
  if (auto k = call_argument(name, "boolean")) return boolean_lattice(*k);
  if (auto k = call_argument(name, "idzn")) return ideal_lattice(static_cast<unsigned>(*k));
  throw Error(ErrorCode::UnknownName, "unknown builtin '" + std::string(name) + "'");
}

std::string_view to_string(SearchLevel level) {
  return level == SearchLevel::Multiplicative ? "multiplicative" : "v_lattice";
}

std::optional<SearchLevel> parse_search_level(std::string_view name) {
  if (name == "multiplicative") return SearchLevel::Multiplicative;
  if (name == "v_lattice" || name == "v-lattice") return SearchLevel::VLattice;
  return std::nullopt;
}

namespace {

constexpr int kUnset = -1;

class Searcher {
 public:
  Searcher(const FiniteLattice& l, const SearchOptions& options, std::atomic<std::uint64_t>& nodes,
           std::atomic<bool>& exhausted)
      : l_(l), options_(options), n_(l.size()), table_(n_ * n_, kUnset), nodes_(nodes), exhausted_(exhausted) {
    const Element top = l.top();
    for (Element x = 0; x < n_; ++x) {
      set(top, x, static_cast<int>(x));
    }
    for (Element x = 0; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) {
        if (x != top && y != top) cells_.emplace_back(x, y);
      }
    }
  }

  const std::vector<std::pair<Element, Element>>& cells() const { return cells_; }
  std::vector<Element> domain(std::size_t k) const {
    const auto [x, y] = cells_[k];
    return l_.down_set(l_.meet(x, y)).to_vector();
  }

  void run_from(std::size_t k) { dfs(k); }

  // Assigns cell k and reports whether the partial table stays consistent.
  bool assign(std::size_t k, Element v) {
    set(cells_[k].first, cells_[k].second, static_cast<int>(v));
    return consistent();
  }

  std::uint64_t count() const { return count_; }
  std::vector<MultTable>& examples() { return examples_; }

 private:
  int at(Element a, Element b) const { return table_[a * n_ + b]; }
  void set(Element a, Element b, int v) {
    table_[a * n_ + b] = v;
    table_[b * n_ + a] = v;
  }

  bool consistent() const {
    const bool distributive = options_.level == SearchLevel::Multiplicative;
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        const int ab = at(a, b);
        for (Element c = 0; c < n_; ++c) {
          const int bc = at(b, c);
          if (ab != kUnset && bc != kUnset) {
            const int left = at(static_cast<Element>(ab), c);
            const int right = at(a, static_cast<Element>(bc));
            if (left != kUnset && right != kUnset && left != right) return false;
          }
          if (a != b && l_.leq(a, b)) {
            const int ac = at(a, c);
            const int bc2 = at(b, c);
            if (ac != kUnset && bc2 != kUnset && !l_.leq(static_cast<Element>(ac), static_cast<Element>(bc2))) return false;
          }
          if (distributive && ab != kUnset) {
            const int ac = at(a, c);
            const int aj = at(a, l_.join(b, c));
            if (ac != kUnset && aj != kUnset &&
                static_cast<Element>(aj) != l_.join(static_cast<Element>(ab), static_cast<Element>(ac))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  void dfs(std::size_t k) {
    if (exhausted_.load(std::memory_order_relaxed)) return;
    if (k == cells_.size()) {
      ++count_;
      if (examples_.size() < options_.max_examples) {
        examples_.emplace_back(n_, std::vector<Element>(table_.begin(), table_.end()));
      }
      return;
    }
    const auto [x, y] = cells_[k];
    for (Element v : domain(k)) {
      const std::uint64_t visited = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
      if (options_.budget && visited > *options_.budget) {
        exhausted_.store(true);
        break;
      }
      set(x, y, static_cast<int>(v));
      if (consistent()) dfs(k + 1);
    }
    set(x, y, kUnset);
  }

  const FiniteLattice& l_;
  const SearchOptions& options_;
  std::size_t n_;
  std::vector<int> table_;
  std::vector<std::pair<Element, Element>> cells_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& exhausted_;
  std::uint64_t count_ = 0;
  std::vector<MultTable> examples_;
};

}  // namespace

SearchResult search_multiplications(const FiniteLattice& lattice, const SearchOptions& options) {
  if (lattice.size() > 7 && !options.budget) {
    throw Error(ErrorCode::LimitExceeded, "exhaustive search is limited to 7 elements; pass a budget");
  }
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  SearchResult result;

  Searcher root(lattice, options, nodes, exhausted);
  if (root.cells().empty() || options.threads <= 1) {
    root.run_from(0);
    result.count = root.count();
    result.examples = std::move(root.examples());
  } else {
    // One subtree per value of the first cell, merged in value order.
    const std::vector<Element> first = root.domain(0);
    std::vector<Searcher> workers;
    workers.reserve(first.size());
    for (std::size_t k = 0; k < first.size(); ++k) workers.emplace_back(lattice, options, nodes, exhausted);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < first.size(); k = next++) {
        nodes.fetch_add(1, std::memory_order_relaxed);
        if (workers[k].assign(0, first[k])) workers[k].run_from(1);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& w : workers) {
      result.count += w.count();
      for (auto& e : w.examples()) {
        if (result.examples.size() < options.max_examples) result.examples.push_back(std::move(e));
      }
    }
  }
  result.nodes = nodes.load();
  result.complete = !exhausted.load();
  return result;
}

}  // namespace mlat
