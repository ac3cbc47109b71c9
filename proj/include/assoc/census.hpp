#pragma once

// Exhaustive census of pair problems of one size.  A class is a source
// triangulation taken up to rotation and reflection (represented by the
// least word in its orbit) together with any target; there are
// (#source orbits) x C(n) classes.  This is coarser bookkeeping than orbits of
// pairs: sources with a non-trivial stabiliser keep all their targets.
//
// The census runs on a precomputed table of the whole flip graph: every
// triangulation is an index in lexicographic word order, neighbours are index
// lists and all-pairs distances are a byte matrix filled by one BFS per row.

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "assoc/core.hpp"
#include "assoc/flip_graph.hpp"

namespace assoc {

class flip_table {
 public:
  static constexpr int max_table_size = 10;  // chord sets must fit in 64 bits

  explicit flip_table(int n, unsigned threads = 1) : n_(n) {
    if (n < 1 || n > max_table_size)
      throw error(errc::resource_guard,
                  "flip table supports sizes 1.." + std::to_string(max_table_size) + ", got " + std::to_string(n));
    for_each_word(n, [&](std::uint64_t w) { words_.push_back(w); }, max_table_size);
    index_chords();
    build_neighbors();
    build_symmetries();
    build_distances(std::max(1u, threads));
  }

  int size() const noexcept { return n_; }
  std::uint32_t count() const noexcept { return static_cast<std::uint32_t>(words_.size()); }
  int degree() const noexcept { return n_ - 1; }
  std::uint64_t word(std::uint32_t i) const { return words_[i]; }

  std::uint32_t index_of(std::uint64_t word) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), word);
    if (it == words_.end() || *it != word) throw error(errc::invalid_argument, "word not in table");
    return static_cast<std::uint32_t>(it - words_.begin());
  }

  // Neighbours of i in chord-sorted order.
  const std::uint32_t* neighbors(std::uint32_t i) const { return &nbr_[static_cast<std::size_t>(i) * degree()]; }
  // Neighbours of i in preorder of the flipped chord's dual node.
  const std::uint32_t* preorder_neighbors(std::uint32_t i) const {
    return &nbr_pre_[static_cast<std::size_t>(i) * degree()];
  }

  int conflicts(std::uint32_t i, std::uint32_t j) const {
    std::uint64_t mine = chord_set_[i];
    const std::uint64_t theirs = chord_set_[j];
    int total = 0;
    while (mine) {
      total += std::popcount(cross_[std::countr_zero(mine)] & theirs);
      mine &= mine - 1;
    }
    return total;
  }

  // Distances from every triangulation to j.
  const std::uint8_t* distances_to(std::uint32_t j) const { return &dist_[static_cast<std::size_t>(j) * count()]; }
  int distance(std::uint32_t i, std::uint32_t j) const { return distances_to(j)[i]; }

  std::size_t group_order() const noexcept { return perm_.size(); }
  std::uint32_t image(std::size_t g, std::uint32_t i) const { return perm_[g][i]; }

  // True iff s is the least word in its orbit.
  bool is_source_canonical(std::uint32_t s) const {
    for (std::size_t g = 1; g < perm_.size(); ++g)
      if (perm_[g][s] < s) return false;
    return true;
  }

  // True iff (s, t) is the least pair in its orbit.
  bool is_canonical(std::uint32_t s, std::uint32_t t) const {
    for (std::size_t g = 1; g < perm_.size(); ++g) {
      const std::uint32_t a = perm_[g][s];
      if (a < s) return false;
      if (a == s && perm_[g][t] < t) return false;
    }
    return true;
  }

 private:
  void index_chords() {
    std::vector<chord> all;
    for (int a = 0; a <= n_ + 1; ++a)
      for (int b = a + 2; b <= n_ + 1; ++b)
        if (!cyclically_adjacent(a, b, n_)) all.push_back({a, b});
    auto id = [&](chord c) { return static_cast<int>(std::lower_bound(all.begin(), all.end(), c) - all.begin()); };
    cross_.assign(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        if (chords_cross(all[i], all[j], n_)) cross_[i] |= std::uint64_t{1} << j;
    chord_set_.reserve(words_.size());
    for (auto w : words_) {
      std::uint64_t set = 0;
      const auto t = from_packed(w, n_);
      for (const auto& c : t.chords()) set |= std::uint64_t{1} << id(c);
      chord_set_.push_back(set);
    }
  }

  void build_neighbors() {
    nbr_.reserve(words_.size() * static_cast<std::size_t>(degree()));
    nbr_pre_.reserve(nbr_.capacity());
    for (auto w : words_) {
      detail::for_each_neighbor(w, n_, [&](chord, chord, std::uint64_t nw) { nbr_.push_back(index_of(nw)); });
      detail::for_each_neighbor_preorder(w, n_, [&](chord, chord, std::uint64_t nw) { nbr_pre_.push_back(index_of(nw)); });
    }
  }

  void build_symmetries() {
    for (const auto& g : dihedral_group(n_)) {
      std::vector<std::uint32_t> p(words_.size());
      for (std::uint32_t i = 0; i < count(); ++i) p[i] = index_of(apply_symmetry(from_packed(words_[i], n_), g).key());
      perm_.push_back(std::move(p));
    }
  }

  void build_distances(unsigned threads) {
    const std::size_t c = count();
    dist_.assign(c * c, 0);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
      std::vector<std::uint32_t> queue(c);
      for (std::uint32_t src; (src = next++) < c;) {
        std::uint8_t* row = &dist_[src * c];
        std::fill(row, row + c, std::uint8_t{0xff});
        row[src] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
          const std::uint32_t x = queue[head++];
          const std::uint32_t* nb = neighbors(x);
          for (int k = 0; k < degree(); ++k)
            if (row[nb[k]] == 0xff) {
              row[nb[k]] = static_cast<std::uint8_t>(row[x] + 1);
              queue[tail++] = nb[k];
            }
        }
      }
    };
    run_workers(threads, worker);
  }

 public:
  template <typename F>
  static void run_workers(unsigned threads, F& worker) {
    if (threads <= 1) {
      worker();
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> chord_set_;
  std::vector<std::uint64_t> cross_;
  std::vector<std::uint32_t> nbr_;
  std::vector<std::uint32_t> nbr_pre_;
  std::vector<std::vector<std::uint32_t>> perm_;
  std::vector<std::uint8_t> dist_;
};

struct census_record {
  int n = 0;
  std::uint64_t s_word = 0;
  std::uint64_t t_word = 0;
  int distance = 0;
  int conflicts = 0;
  int greedy_length = 0;
  bool first_step_forced_increase = false;  // every geodesic first move raises conflicts
  bool monotone_geodesic_exists = false;

  int overestimate() const noexcept { return greedy_length - distance; }

  friend bool operator==(const census_record&, const census_record&) = default;
};

// Per-query work on one pair of table indices.
class census_evaluator {
 public:
  explicit census_evaluator(const flip_table& table)
      : table_(table), stamp_(table.count(), 0), verdict_(table.count(), 0) {}

  census_record evaluate(std::uint32_t s, std::uint32_t t) {
    census_record r;
    r.n = table_.size();
    r.s_word = table_.word(s);
    r.t_word = table_.word(t);
    const std::uint8_t* dt = table_.distances_to(t);
    r.distance = dt[s];
    r.conflicts = table_.conflicts(s, t);
    r.greedy_length = greedy_length(s, t);
    if (s == t) {
      r.first_step_forced_increase = false;
      r.monotone_geodesic_exists = true;
      return r;
    }
    bool all_rise = true;
    const std::uint32_t* nb = table_.neighbors(s);
    for (int k = 0; k < table_.degree(); ++k)
      if (dt[nb[k]] + 1 == dt[s] && table_.conflicts(nb[k], t) <= r.conflicts) all_rise = false;
    r.first_step_forced_increase = all_rise;
    ++generation_;
    r.monotone_geodesic_exists = monotone(s, t, dt, r.conflicts);
    return r;
  }

  // Minimal-conflict walk, ties going to the earliest node in preorder
  // (tie_rule::preorder_first).
  int greedy_length(std::uint32_t s, std::uint32_t t) const {
    int steps = 0;
    for (std::uint32_t x = s; x != t; ++steps) {
      int best = INT_MAX;
      std::uint32_t pick = x;
      const std::uint32_t* nb = table_.preorder_neighbors(x);
      for (int k = 0; k < table_.degree(); ++k) {
        const int c = table_.conflicts(nb[k], t);
        if (c < best) {
          best = c;
          pick = nb[k];
        }
      }
      x = pick;
    }
    return steps;
  }

 private:
  bool monotone(std::uint32_t x, std::uint32_t t, const std::uint8_t* dt, int conf) {
    if (x == t) return true;
    if (stamp_[x] == generation_) return verdict_[x];
    bool found = false;
    const std::uint32_t* nb = table_.neighbors(x);
    for (int k = 0; k < table_.degree() && !found; ++k) {
      if (dt[nb[k]] + 1 != dt[x]) continue;
      const int c = table_.conflicts(nb[k], t);
      if (c <= conf) found = monotone(nb[k], t, dt, c);
    }
    stamp_[x] = generation_;
    verdict_[x] = found;
    return found;
  }

  const flip_table& table_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> verdict_;
  std::uint32_t generation_ = 0;
};

struct census_options {
  unsigned threads = 1;
  bool force = false;                 // required for n = 10
  std::uint32_t block_size = 64;      // first-component indices per block
  std::filesystem::path checkpoint;   // empty: no checkpointing
};

inline constexpr int census_default_max = 9;

inline void check_census_size(int n, bool force) {
  if (n < 3) throw error(errc::resource_guard, "census needs n >= 3");
  if (n > flip_table::max_table_size)
    throw error(errc::resource_guard, "census supports n <= " + std::to_string(flip_table::max_table_size));
  if (n > census_default_max && !force)
    throw error(errc::resource_guard, "census of size " + std::to_string(n) + " takes hours; pass --force");
}

// --- CSV ---------------------------------------------------------------------

inline constexpr const char* census_csv_header =
    "s_word,t_word,distance,conflicts,greedy_length,overestimate,first_step_forced_increase,monotone_geodesic_exists";

inline std::string to_csv(const census_record& r) {
  std::string out = tree_word::from_packed(r.s_word, r.n).str();
  out += ',';
  out += tree_word::from_packed(r.t_word, r.n).str();
  for (int v : {r.distance, r.conflicts, r.greedy_length, r.overestimate(), int(r.first_step_forced_increase),
                int(r.monotone_geodesic_exists)}) {
    out += ',';
    out += std::to_string(v);
  }
  return out;
}

inline census_record parse_csv_record(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  if (cells.size() != 8) throw error(errc::parse_error, "census row needs 8 columns: " + line);
  census_record r;
  try {
    const auto s = validate_word(cells[0]);
    const auto t = validate_word(cells[1]);
    if (s.size() != t.size()) throw error(errc::size_mismatch, "census row mixes sizes");
    r.n = s.size();
    r.s_word = s.packed();
    r.t_word = t.packed();
    r.distance = std::stoi(cells[2]);
    r.conflicts = std::stoi(cells[3]);
    r.greedy_length = std::stoi(cells[4]);
    if (std::stoi(cells[5]) != r.overestimate()) throw error(errc::parse_error, "overestimate column inconsistent");
    r.first_step_forced_increase = std::stoi(cells[6]) != 0;
    r.monotone_geodesic_exists = std::stoi(cells[7]) != 0;
  } catch (const std::logic_error&) {
    throw error(errc::parse_error, "malformed census row: " + line);
  }
  return r;
}

// --- checkpointing ------------------------------------------------------------

namespace detail {

// Completed block ids live in the checkpoint file, one per line; each
// block's rows are kept in <checkpoint>.blocks/<id>.csv followed by an
// "# end <id> <rows>" trailer.
class census_checkpoint {
 public:
  census_checkpoint(std::filesystem::path file, std::uint32_t block_count)
      : file_(std::move(file)), dir_(file_.string() + ".blocks"), block_count_(block_count) {
    std::filesystem::create_directories(dir_);
    std::ifstream in(file_);
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      std::size_t used = 0;
      unsigned long id = 0;
      try {
        id = std::stoul(line, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != line.size() || id >= block_count_)
        throw error(errc::checkpoint_corrupt, "bad block id '" + line + "' in " + file_.string());
      done_.insert(static_cast<std::uint32_t>(id));
    }
  }

  bool completed(std::uint32_t id) const { return done_.count(id) != 0; }

  // Reloads a finished block, checking every row falls inside the block's
  // first-component range, in increasing order, with the recorded row count.
  std::vector<census_record> load(std::uint32_t id, const flip_table& table, std::uint32_t lo, std::uint32_t hi) const {
    std::ifstream in(block_path(id));
    if (!in) throw error(errc::checkpoint_corrupt, "missing block file " + block_path(id).string());
    std::vector<census_record> rows;
    bool closed = false;
    std::pair<std::uint32_t, std::uint32_t> last{0, 0};
    for (std::string line; std::getline(in, line);) {
      if (line.rfind("# end ", 0) == 0) {
        std::istringstream tail(line.substr(6));
        std::uint64_t tid = 0, count = 0;
        if (!(tail >> tid >> count) || tid != id || count != rows.size())
          throw error(errc::checkpoint_corrupt, "block " + std::to_string(id) + " trailer mismatch");
        closed = true;
        break;
      }
      census_record r;
      try {
        r = parse_csv_record(line);
      } catch (const error& e) {
        throw error(errc::checkpoint_corrupt, "block " + std::to_string(id) + ": " + e.what());
      }
      if (r.n != table.size()) throw error(errc::checkpoint_corrupt, "block " + std::to_string(id) + " has wrong size");
      const std::pair key{table.index_of(r.s_word), table.index_of(r.t_word)};
      if (key.first < lo || key.first >= hi || (!rows.empty() && !(last < key)))
        throw error(errc::checkpoint_corrupt, "block " + std::to_string(id) + " row outside its range");
      last = key;
      rows.push_back(r);
    }
    if (!closed) throw error(errc::checkpoint_corrupt, "block " + std::to_string(id) + " is truncated");
    return rows;
  }

  void store(std::uint32_t id, const std::vector<census_record>& rows) {
    const auto path = block_path(id);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      for (const auto& r : rows) out << to_csv(r) << '\n';
      out << "# end " << id << ' ' << rows.size() << '\n';
    }
    std::filesystem::rename(tmp, path);
    std::lock_guard lock(mu_);
    std::ofstream log(file_, std::ios::app);
    log << id << '\n';
  }

 private:
  std::filesystem::path block_path(std::uint32_t id) const { return dir_ / (std::to_string(id) + ".csv"); }

  std::filesystem::path file_;
  std::filesystem::path dir_;
  std::uint32_t block_count_;
  std::set<std::uint32_t> done_;
  std::mutex mu_;
};

}  // namespace detail

// Streams one record per equivalence class to `sink`, in increasing order of
// the canonical (source word, target word) key, whatever the thread count.
inline void run_census(const flip_table& table, const census_options& opt,
                       const std::function<void(const census_record&)>& sink) {
  check_census_size(table.size(), opt.force);
  const std::uint32_t count = table.count();
  const std::uint32_t block = std::max<std::uint32_t>(1, opt.block_size);
  const std::uint32_t blocks = (count + block - 1) / block;
  std::optional<detail::census_checkpoint> checkpoint;
  if (!opt.checkpoint.empty()) checkpoint.emplace(opt.checkpoint, blocks);

  std::vector<std::optional<std::vector<census_record>>> finished(blocks);
  std::uint32_t emitted = 0;
  std::mutex mu;
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;

  // Must be called with mu held.
  auto flush = [&] {
    while (emitted < blocks && finished[emitted]) {
      for (const auto& r : *finished[emitted]) sink(r);
      finished[emitted].reset();
      ++emitted;
    }
  };

  auto worker = [&] {
    census_evaluator eval(table);
    try {
      for (std::uint32_t id; (id = next++) < blocks;) {
        const std::uint32_t lo = id * block;
        const std::uint32_t hi = std::min(count, lo + block);
        std::vector<census_record> rows;
        if (checkpoint && checkpoint->completed(id)) {
          rows = checkpoint->load(id, table, lo, hi);
        } else {
          for (std::uint32_t s = lo; s < hi; ++s) {
            if (!table.is_source_canonical(s)) continue;
            for (std::uint32_t t = 0; t < count; ++t) rows.push_back(eval.evaluate(s, t));
          }
          if (checkpoint) checkpoint->store(id, rows);
        }
        std::lock_guard lock(mu);
        finished[id] = std::move(rows);
        flush();
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };
  flip_table::run_workers(std::max(1u, opt.threads), worker);
  if (failure) std::rethrow_exception(failure);
}

inline std::vector<census_record> run_census(int n, const census_options& opt = {}) {
  check_census_size(n, opt.force);
  const flip_table table(n, opt.threads);
  std::vector<census_record> out;
  run_census(table, opt, [&](const census_record& r) { out.push_back(r); });
  return out;
}

namespace detail {

// Burnside's lemma: sum over the group of (fixed triangulations)^power.
inline std::uint64_t burnside_orbits(int n, int power) {
  const auto all = enumerate_triangulations(n, std::max(n, default_max_size()));
  std::uint64_t total = 0;
  const auto group = dihedral_group(n);
  for (const auto& g : group) {
    std::uint64_t fixed = 0;
    for (const auto& t : all) fixed += apply_symmetry(t, g) == t;
    total += power == 1 ? fixed : fixed * fixed;
  }
  return total / group.size();
}

}  // namespace detail

// Dihedral orbits of triangulations of size n.
inline std::uint64_t triangulation_orbit_count(int n) { return detail::burnside_orbits(n, 1); }

// Orbits of ordered pairs under simultaneous action (what canonical_pair
// distinguishes).
inline std::uint64_t pair_orbit_count(int n) { return detail::burnside_orbits(n, 2); }

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// Census classes: source orbits times all targets.
inline std::uint64_t expected_class_count(int n) { return triangulation_orbit_count(n) * catalan(n); }

// --- aggregation -----------------------------------------------------------------

struct census_summary {
  int n = 0;
  std::uint64_t class_count = 0;
  std::uint64_t conflict_increase_class_count = 0;  // forced first-step increase
  std::uint64_t no_monotone_class_count = 0;
  std::map<int, std::uint64_t> histogram;           // overestimate -> classes
  std::uint64_t overestimate_sum = 0;
  std::uint64_t distance_sum = 0;
  int max_distance = 0;

  void add(const census_record& r) {
    if (class_count == 0) n = r.n;
    if (r.n != n) throw error(errc::size_mismatch, "census records of different sizes");
    ++class_count;
    conflict_increase_class_count += r.first_step_forced_increase;
    no_monotone_class_count += !r.monotone_geodesic_exists;
    ++histogram[r.overestimate()];
    overestimate_sum += static_cast<std::uint64_t>(r.overestimate());
    distance_sum += static_cast<std::uint64_t>(r.distance);
    max_distance = std::max(max_distance, r.distance);
  }

  void merge(const census_summary& o) {
    if (o.class_count == 0) return;
    if (class_count == 0) n = o.n;
    if (o.n != n) throw error(errc::size_mismatch, "census summaries of different sizes");
    class_count += o.class_count;
    conflict_increase_class_count += o.conflict_increase_class_count;
    no_monotone_class_count += o.no_monotone_class_count;
    for (auto [k, v] : o.histogram) histogram[k] += v;
    overestimate_sum += o.overestimate_sum;
    distance_sum += o.distance_sum;
    max_distance = std::max(max_distance, o.max_distance);
  }

  // overestimate_sum / class_count
  double mean_overestimate() const { return class_count ? double(overestimate_sum) / double(class_count) : 0.0; }
  // overestimate_sum / distance_sum
  double mean_relative_overestimate() const { return distance_sum ? double(overestimate_sum) / double(distance_sum) : 0.0; }
  double fraction_correct() const {
    auto it = histogram.find(0);
    return class_count && it != histogram.end() ? double(it->second) / double(class_count) : 0.0;
  }
};

inline census_summary aggregate(const std::vector<census_record>& records,
                                std::optional<std::uint64_t> expected_classes = std::nullopt) {
  if (records.empty()) throw error(errc::empty_input, "no census records to aggregate");
  census_summary s;
  for (const auto& r : records) s.add(r);
  if (expected_classes && *expected_classes != s.class_count)
    throw error(errc::incomplete_stream, "expected " + std::to_string(*expected_classes) + " classes, got " +
                                             std::to_string(s.class_count));
  return s;
}

inline std::string format_decimal(double v, int digits = 9) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

inline std::string summary_text(const census_summary& s) {
  std::ostringstream os;
  os << "n = " << s.n << '\n';
  os << "class_count = " << s.class_count << '\n';
  os << "conflict_increase_class_count = " << s.conflict_increase_class_count << '\n';
  os << "no_monotone_geodesic_class_count = " << s.no_monotone_class_count << '\n';
  for (auto [k, v] : s.histogram) os << "overestimate_" << k << " = " << v << '\n';
  os << "overestimate_sum = " << s.overestimate_sum << '\n';
  os << "mean_overestimate = " << s.overestimate_sum << '/' << s.class_count << " = "
     << format_decimal(s.mean_overestimate()) << '\n';
  os << "mean_relative_overestimate = " << s.overestimate_sum << '/' << s.distance_sum << " = "
     << format_decimal(s.mean_relative_overestimate()) << '\n';
  os << "fraction_correct = " << format_decimal(s.fraction_correct()) << '\n';
  os << "max_distance = " << s.max_distance << '\n';
  return os.str();
}

inline nlohmann::ordered_json summary_json(const census_summary& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["class_count"] = s.class_count;
  j["conflict_increase_class_count"] = s.conflict_increase_class_count;
  j["no_monotone_geodesic_class_count"] = s.no_monotone_class_count;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (auto [k, v] : s.histogram) hist[std::to_string(k)] = v;
  j["overestimate_histogram"] = hist;
  j["mean_overestimate"] = {{"numerator", s.overestimate_sum},
                            {"denominator", s.class_count},
                            {"value", s.mean_overestimate()}};
  j["mean_relative_overestimate"] = {{"numerator", s.overestimate_sum},
                                     {"denominator", s.distance_sum},
                                     {"value", s.mean_relative_overestimate()}};
  j["fraction_correct"] = s.fraction_correct();
  j["max_distance"] = s.max_distance;
  return j;
}

}  // namespace assoc
