#include "bolano/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

using Counts = std::map<NormalSignature, std::uint64_t>;

NormalSignature signature_of(const std::vector<LadderOp>& ops) {
  std::map<ModeLabel, ModePowers> per_mode;
  for (const auto& op : ops) {
    auto& e = per_mode[op.mode];
    e.mode = op.mode;
    (op.kind == OpKind::Create ? e.p : e.q) += 1;
  }
  std::vector<ModePowers> entries;
  entries.reserve(per_mode.size());
  for (auto& [mode, e] : per_mode) entries.push_back(std::move(e));
  return NormalSignature(std::move(entries));
}

void rewrite(const std::vector<LadderOp>& ops, Counts& out) {
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    if (ops[i].kind != OpKind::Annihilate || ops[i + 1].kind != OpKind::Create) {
      continue;
    }
    std::vector<LadderOp> swapped = ops;
    std::swap(swapped[i], swapped[i + 1]);
    rewrite(swapped, out);
    if (ops[i].mode == ops[i + 1].mode) {
      std::vector<LadderOp> contracted;
      contracted.reserve(ops.size() - 2);
      contracted.insert(contracted.end(), ops.begin(), ops.begin() + i);
      contracted.insert(contracted.end(), ops.begin() + i + 2, ops.end());
      rewrite(contracted, out);
    }
    return;
  }
  ++out[signature_of(ops)];
}

GaussianRational gaussian_pow(GaussianRational base, long long n) {
  if (n < 0) {
    const Rational norm = base.re * base.re + base.im * base.im;
    if (norm == 0) throw UnsupportedScalarPower("zero raised to a negative power");
    base = {base.re / norm, -base.im / norm};
    n = -n;
  }
  GaussianRational out{1, 0};
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

long long as_long(const Rational& integer) {
  return static_cast<long long>(boost::multiprecision::numerator(integer));
}

std::uint64_t factorial_u64(unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

// Action of a single-mode operator string (rightmost first) on |n>:
// the target occupation and the reduced amplitude, or nothing if it vanishes.
struct ModeAction {
  unsigned target = 0;
  Rational reduced;
};

std::optional<ModeAction> act(const std::vector<OpKind>& ops, unsigned n, unsigned dim) {
  BigInt amp2 = 1;
  unsigned occ = n;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (*it == OpKind::Annihilate) {
      if (occ == 0) return std::nullopt;
      amp2 *= occ;
      --occ;
    } else {
      if (occ + 1 >= dim) return std::nullopt;
      ++occ;
      amp2 *= occ;
    }
  }
  const Rational ratio(amp2, BigInt(factorial_u64(n)) * factorial_u64(occ));
  auto root = exact_root(ratio, 2);
  if (!root) {
    throw InvariantViolation("reduced Fock amplitude is not rational");
  }
  return ModeAction{occ, *root};
}

}  // namespace

NormalPoly flatten_and_swap_no(const LadderPoly& p) {
  NormalPoly out;
  for (const auto& [word, coeff] : p.terms()) {
    Counts counts;
    rewrite(word.flatten(), counts);
    for (const auto& [sig, n] : counts) out.add(sig, coeff.scaled(Rational(n)));
  }
  return out;
}

GaussianRational evaluate(const Scalar& s, const Substitution& subs) {
  GaussianRational total{0, 0};
  for (const auto& [key, coeff] : s.terms()) {
    GaussianRational term{coeff, 0};
    if (key.imaginary) term = term * GaussianRational{0, 1};
    for (const auto& [atom, e] : key.powers) {
      auto it = subs.symbols.find(atom.name);
      if (it == subs.symbols.end()) {
        throw MissingSubstitution("no value for symbol '" + atom.name + "'");
      }
      if (is_integer(e)) {
        term = term * gaussian_pow(it->second, as_long(e));
        continue;
      }
      const GaussianRational& v = it->second;
      if (v.im != 0 || v.re < 0) {
        throw UnsupportedScalarPower("fractional power of '" + atom.name +
                                     "' needs a nonnegative real value");
      }
      const auto q = static_cast<unsigned>(boost::multiprecision::denominator(e));
      auto root = exact_root(v.re, q);
      if (!root) {
        throw UnsupportedScalarPower("value of '" + atom.name + "' has no exact root");
      }
      term = term * gaussian_pow({*root, 0},
                                 static_cast<long long>(boost::multiprecision::numerator(e)));
    }
    for (const auto& [atom, mult] : key.phases) {
      auto it = subs.phases.find(atom.name);
      if (it == subs.phases.end()) {
        throw MissingSubstitution("no value for exp(i*" + atom.name + ")");
      }
      if (!is_integer(mult)) {
        throw UnsupportedScalarPower("fractional phase multiplier for '" + atom.name + "'");
      }
      term = term * gaussian_pow(it->second, as_long(mult));
    }
    total = total + term;
  }
  return total;
}

FockMatrix::FockMatrix(std::vector<ModeLabel> modes, unsigned dim)
    : modes_(std::move(modes)), dim_(dim) {
  if (dim_ == 0) throw InvariantViolation("Fock dimension must be positive");
  std::sort(modes_.begin(), modes_.end());
  modes_.erase(std::unique(modes_.begin(), modes_.end()), modes_.end());
}

std::size_t FockMatrix::basis_size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < modes_.size(); ++i) n *= dim_;
  return n;
}

std::size_t FockMatrix::index_of(const FockState& state) const {
  std::size_t index = 0;
  for (unsigned n : state) index = index * dim_ + n;
  return index;
}

FockState FockMatrix::state_of(std::size_t index) const {
  FockState state(modes_.size());
  for (std::size_t m = modes_.size(); m-- > 0;) {
    state[m] = static_cast<unsigned>(index % dim_);
    index /= dim_;
  }
  return state;
}

GaussianRational FockMatrix::reduced(const FockState& row, const FockState& col) const {
  auto it = entries_.find({index_of(row), index_of(col)});
  return it == entries_.end() ? GaussianRational{0, 0} : it->second;
}

Rational FockMatrix::squared_magnitude(const FockState& row, const FockState& col) const {
  const GaussianRational v = reduced(row, col);
  Rational scale = 1;
  for (std::size_t m = 0; m < row.size(); ++m) {
    scale *= Rational(factorial_u64(row[m])) * factorial_u64(col[m]);
  }
  return (v.re * v.re + v.im * v.im) * scale;
}

void FockMatrix::accumulate(const FockState& row, const FockState& col,
                            const GaussianRational& value) {
  if (value.is_zero()) return;
  auto key = std::make_pair(index_of(row), index_of(col));
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second = it->second + value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

bool FockMatrix::block_equal(const FockMatrix& other, unsigned margin) const {
  if (modes_ != other.modes_ || dim_ != other.dim_) return false;
  if (margin >= dim_) return true;
  const unsigned limit = dim_ - margin;
  auto in_block = [&](std::size_t index) {
    const FockState s = state_of(index);
    return std::all_of(s.begin(), s.end(), [&](unsigned n) { return n < limit; });
  };
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, v] : entries_) keys.insert(k);
  for (const auto& [k, v] : other.entries_) keys.insert(k);
  for (const auto& key : keys) {
    if (!in_block(key.first) || !in_block(key.second)) continue;
    auto a = entries_.find(key);
    auto b = other.entries_.find(key);
    const GaussianRational va = a == entries_.end() ? GaussianRational{0, 0} : a->second;
    const GaussianRational vb = b == other.entries_.end() ? GaussianRational{0, 0} : b->second;
    if (!(va == vb)) return false;
  }
  return true;
}

FockMatrix fock_matrix(const LadderPoly& p, const std::vector<ModeLabel>& modes,
                       unsigned dim, const Substitution& subs) {
  FockMatrix out(modes, dim);
  const auto& basis_modes = out.modes();
  const std::size_t n_modes = basis_modes.size();
  for (const auto& [word, coeff] : p.terms()) {
    const GaussianRational c = evaluate(coeff, subs);
    if (c.is_zero()) continue;
    // Operators of distinct modes commute, so the action factorizes.
    std::vector<std::vector<OpKind>> per_mode(n_modes);
    for (const auto& op : word.flatten()) {
      auto it = std::lower_bound(basis_modes.begin(), basis_modes.end(), op.mode);
      if (it == basis_modes.end() || *it != op.mode) {
        throw InvariantViolation("mode '" + op.mode.label + "' missing from Fock basis");
      }
      per_mode[it - basis_modes.begin()].push_back(op.kind);
    }
    std::vector<std::vector<std::optional<ModeAction>>> table(n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
      table[m].reserve(dim);
      for (unsigned n = 0; n < dim; ++n) table[m].push_back(act(per_mode[m], n, dim));
    }
    for (std::size_t col_index = 0; col_index < out.basis_size(); ++col_index) {
      const FockState col = out.state_of(col_index);
      FockState row(n_modes);
      Rational amplitude = 1;
      bool vanishes = false;
      for (std::size_t m = 0; m < n_modes && !vanishes; ++m) {
        const auto& a = table[m][col[m]];
        if (!a) {
          vanishes = true;
        } else {
          row[m] = a->target;
          amplitude *= a->reduced;
        }
      }
      if (vanishes) continue;
      out.accumulate(row, col, {c.re * amplitude, c.im * amplitude});
    }
  }
  return out;
}

FockMatrix fock_matrix(const NormalPoly& p, const std::vector<ModeLabel>& modes,
                       unsigned dim, const Substitution& subs) {
  return fock_matrix(p.to_ladder(), modes, dim, subs);
}

std::vector<ModeLabel> modes_of(const LadderPoly& p) {
  std::set<ModeLabel> modes;
  for (const auto& [word, coeff] : p.terms()) {
    for (const auto& f : word.factors()) modes.insert(f.op.mode);
  }
  return {modes.begin(), modes.end()};
}

}  // namespace bolano
