#include "nilclean/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace nilclean {

namespace {

// Builds the clause set for one target. Variables 1..n^2 are the entries of
// P row-major; every auxiliary variable (product definitions, parity-chain
// links) is introduced after them and is functionally determined by the
// primaries, which keeps satisfying assignments in bijection with witnesses.
class Encoder {
 public:
  Encoder(const Gf2Matrix& a, int k) : a_(a), n_(a.dim()), k_(k) {
    num_vars_ = n_ * n_;
  }

  CnfInstance build() {
    CnfInstance c;
    c.n = n_;
    c.k = k_;
    c.target = a_;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        c.varmap[{i + 1, j + 1}] = p_var(i, j);

    // Idempotence: for each entry, XOR_l (p_il AND p_lj) XOR p_ij = 0.
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::vector<int> terms;
        for (int l = 0; l < n_; ++l)
          terms.push_back(product({p_var(i, l), p_var(l, j)}));
        terms.push_back(p_var(i, j));
        add_parity_zero(std::move(terms));
      }

    // Nilpotence: entry (i,j) of Q^k is the XOR over all index tuples of the
    // product of q literals, where q_il = p_il XOR a_il is a plain literal.
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::vector<int> terms;
        std::vector<int> tuple(static_cast<std::size_t>(k_ - 1), 0);
        while (true) {
          std::vector<int> lits;
          int prev = i;
          for (const int l : tuple) {
            lits.push_back(q_lit(prev, l));
            prev = l;
          }
          lits.push_back(q_lit(prev, j));
          if (const int t = product(std::move(lits)); t != 0)
            terms.push_back(t);
          // advance the odometer
          std::size_t pos = tuple.size();
          while (pos > 0 && tuple[pos - 1] == n_ - 1) tuple[--pos] = 0;
          if (pos == 0) break;
          ++tuple[pos - 1];
        }
        add_parity_zero(std::move(terms));
      }

    c.num_vars = num_vars_;
    c.clauses = std::move(clauses_);
    return c;
  }

 private:
  int p_var(int i, int j) const { return i * n_ + j + 1; }

  int q_lit(int i, int j) const {
    return a_.get(i, j) ? -p_var(i, j) : p_var(i, j);
  }

  int fresh_var() { return ++num_vars_; }

  // AND of a literal conjunction, as a literal: folds duplicates, returns 0
  // for a constant-false conjunction (complementary literals), and otherwise
  // a chain of cached binary Tseitin definitions.
  int product(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (const int l : lits)
      if (std::binary_search(lits.begin(), lits.end(), -l)) return 0;
    int acc = lits[0];
    for (std::size_t i = 1; i < lits.size(); ++i) acc = pair_and(acc, lits[i]);
    return acc;
  }

  int pair_and(int x, int y) {
    const auto key = std::minmax(x, y);
    if (const auto it = and_cache_.find(key); it != and_cache_.end())
      return it->second;
    const int z = fresh_var();
    clauses_.push_back({-z, x});
    clauses_.push_back({-z, y});
    clauses_.push_back({z, -x, -y});
    and_cache_.emplace(key, z);
    return z;
  }

  // Constrain the XOR of the given literals to 0. Negations flip the target
  // parity; duplicate variables cancel mod 2; long lists are chained through
  // fresh link variables three at a time.
  void add_parity_zero(std::vector<int> lits) {
    bool parity = false;  // target bit after normalization
    std::vector<int> vars;
    for (const int l : lits) {
      if (l < 0) parity = !parity;
      vars.push_back(std::abs(l));
    }
    std::sort(vars.begin(), vars.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < vars.size();) {
      if (i + 1 < vars.size() && vars[i] == vars[i + 1]) {
        i += 2;  // x XOR x = 0
      } else {
        kept.push_back(vars[i]);
        ++i;
      }
    }
    while (kept.size() > 3) {
      const int x = kept[0], y = kept[1];
      const int link = fresh_var();
      emit_parity3(x, y, link, false);  // link = x XOR y
      kept.erase(kept.begin(), kept.begin() + 2);
      kept.insert(kept.begin(), link);
    }
    switch (kept.size()) {
      case 0:
        if (parity) clauses_.push_back({});  // unsatisfiable by design
        break;
      case 1:
        clauses_.push_back({parity ? kept[0] : -kept[0]});
        break;
      case 2:
        if (parity) {
          clauses_.push_back({kept[0], kept[1]});
          clauses_.push_back({-kept[0], -kept[1]});
        } else {
          clauses_.push_back({-kept[0], kept[1]});
          clauses_.push_back({kept[0], -kept[1]});
        }
        break;
      default:
        emit_parity3(kept[0], kept[1], kept[2], parity);
        break;
    }
  }

  // x XOR y XOR z = bit, all inputs positive variables: four clauses ruling
  // out the four assignments of the wrong parity.
  void emit_parity3(int x, int y, int z, bool bit) {
    const int sx = bit ? x : -x;
    clauses_.push_back({sx, y, z});
    clauses_.push_back({sx, -y, -z});
    clauses_.push_back({-sx, y, -z});
    clauses_.push_back({-sx, -y, z});
  }

  const Gf2Matrix& a_;
  int n_;
  int k_;
  int num_vars_;
  std::vector<std::vector<int>> clauses_;
  std::map<std::pair<int, int>, int> and_cache_;
};

}  // namespace

CnfInstance encode(const Gf2Matrix& a, int k) {
  if (k < 1) throw std::invalid_argument("nilpotency index must be >= 1");
  if (a.dim() == 0) throw std::invalid_argument("target must be nonempty");
  return Encoder(a, k).build();
}

std::string to_dimacs(const CnfInstance& c) {
  std::ostringstream out;
  if (c.n > 0 || c.k > 0) {
    out << "c meta n " << c.n << "\n";
    out << "c meta k " << c.k << "\n";
    for (int i = 0; i < c.n; ++i) {
      out << "c target ";
      for (int j = 0; j < c.n; ++j) out << (c.target.get(i, j) ? '1' : '0');
      out << "\n";
    }
    for (const auto& [ij, v] : c.varmap)
      out << "c varmap p " << ij.first << " " << ij.second << " " << v << "\n";
  }
  out << "p cnf " << c.num_vars << " " << c.clauses.size() << "\n";
  for (const auto& clause : c.clauses) {
    for (const int l : clause) out << l << " ";
    out << "0\n";
  }
  return out.str();
}

CnfInstance parse_dimacs(const std::string& text) {
  CnfInstance c;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> target_rows;
  bool saw_header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!saw_header && tok == "c") {
      std::string kind;
      if (!(ls >> kind)) continue;
      if (kind == "meta") {
        std::string name;
        if ((ls >> name)) {
          if (name == "n")
            ls >> c.n;
          else if (name == "k")
            ls >> c.k;
        }
      } else if (kind == "target") {
        std::string row;
        if (ls >> row) target_rows.push_back(row);
      } else if (kind == "varmap") {
        std::string p;
        int i = 0, j = 0, v = 0;
        if (ls >> p >> i >> j >> v) c.varmap[{i, j}] = v;
      }
      continue;
    }
    if (tok == "c") continue;  // comments after the header are ignored
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> c.num_vars >> declared_clauses) || fmt != "cnf")
        throw std::invalid_argument("malformed DIMACS header");
      saw_header = true;
      continue;
    }
    if (!saw_header)
      throw std::invalid_argument("clause data precedes DIMACS header");
    // clause tokens; the first is already in tok
    do {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad literal token: " + tok);
      }
      if (lit == 0) {
        c.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(lit) > c.num_vars)
          throw std::invalid_argument("literal out of variable range");
        current.push_back(lit);
      }
    } while (ls >> tok);
  }
  if (!saw_header) throw std::invalid_argument("missing DIMACS header");
  if (!current.empty())
    throw std::invalid_argument("unterminated clause at end of input");
  if (c.clauses.size() != declared_clauses)
    throw std::invalid_argument("clause count disagrees with header");
  if (static_cast<int>(target_rows.size()) != c.n)
    throw std::invalid_argument("target rows disagree with meta n");
  if (c.n > 0) c.target = Gf2Matrix::from_rows(target_rows);
  for (const auto& [ij, v] : c.varmap)
    if (v < 1 || v > c.num_vars)
      throw std::invalid_argument("varmap variable out of range");
  return c;
}

namespace {

class DpllSolver {
 public:
  DpllSolver(const CnfInstance& c, std::uint64_t budget)
      : num_vars_(c.num_vars), budget_(budget) {
    // Canonical form: sorted deduplicated literals per clause (tautologies
    // dropped), clauses sorted — the solve result is independent of the
    // order the encoder emitted them in.
    for (const auto& raw : c.clauses) {
      std::vector<int> cl = raw;
      std::sort(cl.begin(), cl.end(), [](int a, int b) {
        return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
      });
      cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
      bool tautology = false;
      for (std::size_t i = 0; i + 1 < cl.size(); ++i)
        if (cl[i] == -cl[i + 1]) tautology = true;
      if (!tautology) cls_.push_back(std::move(cl));
    }
    std::sort(cls_.begin(), cls_.end());
    cls_.erase(std::unique(cls_.begin(), cls_.end()), cls_.end());

    val_.assign(static_cast<std::size_t>(num_vars_) + 1, -1);
    occ_pos_.assign(val_.size(), {});
    occ_neg_.assign(val_.size(), {});
    sat_cnt_.assign(cls_.size(), 0);
    unassigned_cnt_.assign(cls_.size(), 0);
    for (std::size_t ci = 0; ci < cls_.size(); ++ci) {
      unassigned_cnt_[ci] = static_cast<int>(cls_[ci].size());
      for (const int l : cls_[ci])
        (l > 0 ? occ_pos_[l] : occ_neg_[-l]).push_back(static_cast<int>(ci));
    }
  }

  SolveResult run(SolveMode mode) {
    SolveResult res;
    bool failed_at_root = false;
    for (std::size_t ci = 0; ci < cls_.size() && !failed_at_root; ++ci) {
      if (cls_[ci].empty()) failed_at_root = true;
      if (cls_[ci].size() == 1) {
        const int l = cls_[ci][0];
        const std::int8_t want = l > 0 ? 1 : 0;
        if (value(l) == -1)
          enqueue(l);
        else if (val_[std::abs(l)] != want)
          failed_at_root = true;
      }
    }

    bool conflict = failed_at_root || !propagate();
    while (true) {
      if (conflict) {
        if (!flip_last_decision()) {
          res.status = (mode == SolveMode::kCountAll && res.model_count > 0)
                           ? SolveStatus::kSat
                           : SolveStatus::kUnsat;
          res.decisions = decisions_;
          return res;
        }
        conflict = !propagate();
        continue;
      }
      if (num_sat_ == cls_.size()) {
        const int free_vars = num_vars_ - static_cast<int>(trail_.size());
        if (mode == SolveMode::kCountAll) {
          if (free_vars > 62)
            throw std::overflow_error("model count exceeds 2^62");
          res.model_count += std::uint64_t{1} << free_vars;
          conflict = true;  // treat as a dead end and keep exploring
          continue;
        }
        Assignment a;
        a.values.assign(static_cast<std::size_t>(num_vars_), 0);
        for (int v = 1; v <= num_vars_; ++v)
          if (val_[v] == 1) a.values[v - 1] = 1;
        res.status = SolveStatus::kSat;
        res.assignment = std::move(a);
        res.decisions = decisions_;
        return res;
      }
      if (decisions_ >= budget_) {
        res.status = SolveStatus::kUnknown;
        res.decisions = decisions_;
        return res;
      }
      // Branch: lowest-index unassigned variable, false first. Branch
      // variables increase along any path, so the scan resumes where the
      // innermost decision left off.
      int v = frames_.empty() ? 1 : frames_.back().var + 1;
      while (v <= num_vars_ && val_[v] != -1) ++v;
      if (v > num_vars_)
        throw std::logic_error("no unassigned variable despite open clauses");
      ++decisions_;
      frames_.push_back({trail_.size(), v, false});
      enqueue(-v);
      conflict = !propagate();
    }
  }

 private:
  struct Frame {
    std::size_t trail_mark;
    int var;
    bool tried_true;
  };

  std::int8_t value(int lit) const {
    const std::int8_t v = val_[std::abs(lit)];
    if (v == -1) return -1;
    return (lit > 0) == (v == 1) ? 1 : 0;
  }

  void enqueue(int lit) {
    const int v = std::abs(lit);
    val_[v] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
    for (const int ci : lit > 0 ? occ_pos_[v] : occ_neg_[v])
      if (sat_cnt_[ci]++ == 0) ++num_sat_;
    for (const int ci : lit > 0 ? occ_neg_[v] : occ_pos_[v])
      --unassigned_cnt_[ci];
  }

  bool propagate() {
    while (qhead_ < trail_.size()) {
      const int lit = trail_[qhead_++];
      const int v = std::abs(lit);
      for (const int ci : lit > 0 ? occ_neg_[v] : occ_pos_[v]) {
        if (sat_cnt_[ci] > 0) continue;
        if (unassigned_cnt_[ci] == 0) return false;
        if (unassigned_cnt_[ci] == 1) {
          for (const int u : cls_[ci])
            if (value(u) == -1) {
              enqueue(u);
              break;
            }
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int lit = trail_.back();
      trail_.pop_back();
      const int v = std::abs(lit);
      for (const int ci : lit > 0 ? occ_pos_[v] : occ_neg_[v])
        if (--sat_cnt_[ci] == 0) --num_sat_;
      for (const int ci : lit > 0 ? occ_neg_[v] : occ_pos_[v])
        ++unassigned_cnt_[ci];
      val_[v] = -1;
    }
    qhead_ = trail_.size();
  }

  // Undo decisions until one still has its true-branch untried; take it.
  bool flip_last_decision() {
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      undo_to(f.trail_mark);
      if (!f.tried_true) {
        f.tried_true = true;
        ++decisions_;
        enqueue(f.var);
        return true;
      }
      frames_.pop_back();
    }
    return false;
  }

  int num_vars_;
  std::uint64_t budget_;
  std::vector<std::vector<int>> cls_;
  std::vector<std::vector<int>> occ_pos_, occ_neg_;
  std::vector<int> sat_cnt_, unassigned_cnt_;
  std::vector<std::int8_t> val_;
  std::vector<int> trail_;
  std::size_t qhead_ = 0;
  std::vector<Frame> frames_;
  std::size_t num_sat_ = 0;
  std::uint64_t decisions_ = 0;
};

}  // namespace

SolveResult dpll_solve(const CnfInstance& c, SolveMode mode,
                       std::uint64_t step_budget) {
  return DpllSolver(c, step_budget).run(mode);
}

Decomposition decode_and_verify(const CnfInstance& c, const Assignment& s) {
  if (s.values.size() != static_cast<std::size_t>(c.num_vars))
    throw std::invalid_argument("assignment length disagrees with instance");
  for (const auto& clause : c.clauses) {
    bool sat = false;
    for (const int l : clause)
      if ((l > 0) == (s.values[std::abs(l) - 1] != 0)) {
        sat = true;
        break;
      }
    if (!sat)
      throw std::invalid_argument("assignment does not satisfy the instance");
  }
  Gf2Matrix p = Gf2Matrix::zero(c.n);
  for (const auto& [ij, v] : c.varmap)
    p.set(ij.first - 1, ij.second - 1, s.values[v - 1] != 0);
  const Gf2Matrix q = c.target + p;
  Decomposition d{p, q, c.target, c.k};
  if (!verify_decomposition(d))
    throw std::logic_error(
        "satisfying assignment decodes to an invalid decomposition — "
        "encoder bug");
  return d;
}

ExternalSolution parse_solver_output(const std::string& text, int num_vars) {
  ExternalSolution out;
  bool saw_status = false;
  out.assignment.values.assign(static_cast<std::size_t>(num_vars), 0);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "s") {
      std::string status;
      if (!(ls >> status)) continue;
      if (status == "SATISFIABLE") {
        out.satisfiable = true;
        saw_status = true;
      } else if (status == "UNSATISFIABLE") {
        out.satisfiable = false;
        saw_status = true;
      }
    } else if (tok == "v") {
      int lit = 0;
      while (ls >> lit) {
        if (lit == 0) continue;
        const int v = std::abs(lit);
        if (v > num_vars)
          throw std::invalid_argument("solution mentions unknown variable");
        out.assignment.values[v - 1] = lit > 0 ? 1 : 0;
      }
    }
  }
  if (!saw_status)
    throw std::invalid_argument("no solver status line in solution file");
  return out;
}

}  // namespace nilclean
