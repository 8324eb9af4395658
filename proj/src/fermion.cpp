#include "msuper/fermion.hpp"

#include <algorithm>
#include <stdexcept>

namespace msuper {

// ---------------------------------------------------------------------------
// ModuleLabel
// ---------------------------------------------------------------------------

namespace {

void check_label(const ModuleLabel& l) {
  if (l.N < 1 || l.N > 62) throw std::invalid_argument("label: N out of range");
  if (l.set >> l.N) throw std::invalid_argument("label: set not contained in {1..N}");
  const uint64_t nbit = uint64_t(1) << (l.N - 1);
  if (l.kind == LabelKind::type0) {
    if (!(l.set & nbit)) throw std::invalid_argument("type-0 label must contain N");
  } else {
    if (l.set & nbit) throw std::invalid_argument("type-1 label must not contain N");
  }
}

}  // namespace

ModuleLabel ModuleLabel::type0_label(int N, uint64_t set) {
  ModuleLabel l{LabelKind::type0, N, set};
  check_label(l);
  return l;
}

ModuleLabel ModuleLabel::type1_label(int N, uint64_t set) {
  ModuleLabel l{LabelKind::type1, N, set};
  check_label(l);
  return l;
}

ModuleLabel ModuleLabel::type0_special(int N, int m) {
  if (m < 0 || m >= N) throw std::invalid_argument("type0_special: need 0 <= m < N");
  uint64_t set = 0;
  for (int i = N - m; i <= N; ++i) set |= uint64_t(1) << (i - 1);
  return type0_label(N, set);
}

ModuleLabel ModuleLabel::type1_special(int N, int m) {
  if (m < 0 || m >= N) throw std::invalid_argument("type1_special: need 0 <= m < N");
  uint64_t set = (uint64_t(1) << m) - 1;
  return type1_label(N, set);
}

int ModuleLabel::size() const { return __builtin_popcountll(set); }

int ModuleLabel::fermionic_degree() const {
  return kind == LabelKind::type0 ? size() - 1 : size() + 1;
}

int ModuleLabel::window_m() const { return kind == LabelKind::type0 ? size() - 1 : size(); }

bool ModuleLabel::is_special() const {
  if (kind == LabelKind::type0) return *this == type0_special(N, size() - 1);
  return *this == type1_special(N, size());
}

std::vector<int> ModuleLabel::members() const {
  std::vector<int> out;
  for (int i = 1; i <= N; ++i)
    if (set & (uint64_t(1) << (i - 1))) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// FermionPoly basics
// ---------------------------------------------------------------------------

FermionPoly FermionPoly::phi(int N, uint64_t mask) {
  FermionPoly p(N);
  p.terms.emplace(mask, RatQT::one());
  return p;
}

void FermionPoly::add_term(uint64_t mask, const RatQT& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

FermionPoly FermionPoly::operator+(const FermionPoly& rhs) const {
  FermionPoly out = *this;
  for (const auto& [m, c] : rhs.terms) out.add_term(m, c);
  return out;
}

FermionPoly FermionPoly::operator-(const FermionPoly& rhs) const {
  FermionPoly out = *this;
  for (const auto& [m, c] : rhs.terms) out.add_term(m, -c);
  return out;
}

FermionPoly FermionPoly::scaled(const RatQT& c) const {
  FermionPoly out(N);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms) out.terms.emplace(m, v * c);
  return out;
}

// ---------------------------------------------------------------------------
// Wedge operators and Hecke action
// ---------------------------------------------------------------------------

namespace {

void check_index(int i, int n, int hi) {
  if (i < 1 || i > hi) throw std::out_of_range("operator index out of range for N=" + std::to_string(n));
}

}  // namespace

FermionPoly theta_hat(int i, const FermionPoly& p) {
  check_index(i, p.N, p.N);
  FermionPoly out(p.N);
  const uint64_t bit = uint64_t(1) << (i - 1);
  for (const auto& [m, c] : p.terms) {
    if (m & bit) continue;
    out.add_term(m | bit, (sign_count(m, i) & 1) ? -c : c);
  }
  return out;
}

FermionPoly partial(int i, const FermionPoly& p) {
  check_index(i, p.N, p.N);
  FermionPoly out(p.N);
  const uint64_t bit = uint64_t(1) << (i - 1);
  for (const auto& [m, c] : p.terms) {
    if (!(m & bit)) continue;
    out.add_term(m & ~bit, (sign_count(m, i) & 1) ? -c : c);
  }
  return out;
}

FermionPoly op_M(const FermionPoly& p) {
  FermionPoly out(p.N);
  for (const auto& [m, c] : p.terms)
    for (int i = 1; i <= p.N; ++i) {
      const uint64_t bit = uint64_t(1) << (i - 1);
      if (m & bit) continue;
      out.add_term(m | bit, (sign_count(m, i) & 1) ? -c : c);
    }
  return out;
}

FermionPoly op_D(const FermionPoly& p) {
  FermionPoly out(p.N);
  for (const auto& [m, c] : p.terms)
    for (int i = 1; i <= p.N; ++i) {
      const uint64_t bit = uint64_t(1) << (i - 1);
      if (!(m & bit)) continue;
      const RatQT v = c * RatQT::t_pow(i - 1);
      out.add_term(m & ~bit, (sign_count(m, i) & 1) ? -v : v);
    }
  return out;
}

FermionPoly hecke_T(int i, const FermionPoly& p) {
  check_index(i, p.N, p.N - 1);
  FermionPoly out(p.N);
  const uint64_t bi = uint64_t(1) << (i - 1);
  const uint64_t bj = uint64_t(1) << i;
  static const RatQT t = RatQT::t();
  static const RatQT t1 = RatQT::t() - RatQT::one();
  for (const auto& [m, c] : p.terms) {
    const bool has_i = m & bi, has_j = m & bj;
    if (has_i && has_j) {
      out.add_term(m, -c);
    } else if (!has_i && !has_j) {
      out.add_term(m, c * t);
    } else if (has_i) {
      // theta_i -> theta_{i+1}; adjacent swap keeps the written order.
      out.add_term((m & ~bi) | bj, c);
    } else {
      // theta_{i+1} -> t theta_i + (t-1) theta_{i+1}.
      out.add_term((m & ~bj) | bi, c * t);
      out.add_term(m, c * t1);
    }
  }
  return out;
}

FermionPoly hecke_T_inv(int i, const FermionPoly& p) {
  const RatQT tinv = RatQT::t().inverse();
  const RatQT shift = (RatQT::one() - RatQT::t()) * tinv;
  return hecke_T(i, p).scaled(tinv) + p.scaled(shift);
}

FermionPoly hecke_T_word(const std::vector<int>& word, const FermionPoly& p, bool inverse) {
  FermionPoly out = p;
  for (int i : word) out = inverse ? hecke_T_inv(i, out) : hecke_T(i, out);
  return out;
}

FermionPoly jucys_murphy(int i, const FermionPoly& p) {
  check_index(i, p.N, p.N);
  if (i == p.N) return p;
  FermionPoly out = p;
  for (int j = i; j <= p.N - 1; ++j) out = hecke_T(j, out);
  for (int j = p.N - 1; j >= i; --j) out = hecke_T(j, out);
  return out.scaled(RatQT::t_pow(i - p.N));
}

// ---------------------------------------------------------------------------
// Contents, inversions, tau
// ---------------------------------------------------------------------------

std::vector<int> content_vector(const ModuleLabel& label) {
  check_label(label);
  std::vector<int> c(label.N, 0);
  std::vector<int> mem = label.members(), comp;
  for (int i = 1; i <= label.N; ++i)
    if (!(label.set & (uint64_t(1) << (i - 1)))) comp.push_back(i);
  std::sort(mem.rbegin(), mem.rend());
  std::sort(comp.rbegin(), comp.rend());
  if (label.kind == LabelKind::type0) {
    for (size_t k = 0; k < mem.size(); ++k) c[mem[k] - 1] = -static_cast<int>(k);
    for (size_t k = 0; k < comp.size(); ++k) c[comp[k] - 1] = static_cast<int>(k) + 1;
  } else {
    for (size_t k = 0; k < mem.size(); ++k) c[mem[k] - 1] = -static_cast<int>(k) - 1;
    for (size_t k = 0; k < comp.size(); ++k) c[comp[k] - 1] = static_cast<int>(k);
  }
  return c;
}

int inv_set(const ModuleLabel& label) {
  int inv = 0;
  for (int i = 1; i <= label.N; ++i)
    for (int j = i + 1; j <= label.N; ++j)
      if ((label.set & (uint64_t(1) << (i - 1))) && !(label.set & (uint64_t(1) << (j - 1)))) ++inv;
  return inv;
}

FermionPoly tau_special(const ModuleLabel& label) {
  check_label(label);
  if (!label.is_special())
    throw std::invalid_argument("tau_special: label set is not special; use tau_general");
  const FermionPoly phi = FermionPoly::phi(label.N, label.set);
  return label.kind == LabelKind::type0 ? op_D(phi) : op_M(phi);
}

namespace {

// Dense linear algebra over Q(q,t), sized for hook modules (dims <= ~70).

using Matrix = std::vector<std::vector<RatQT>>;

// Basis vectors of the nullspace of m (rows x cols).
std::vector<std::vector<RatQT>> nullspace(Matrix m, size_t cols) {
  const size_t rows = m.size();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    const RatQT inv = m[r][c].inverse();
    for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const RatQT f = m[i][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<RatQT>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<RatQT> v(cols, RatQT::zero());
    v[c] = RatQT::one();
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[pivot_col_of_row[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b for A with independent columns; throws if inconsistent.
std::vector<RatQT> solve(Matrix a, std::vector<RatQT> b, size_t cols) {
  const size_t rows = a.size();
  std::vector<int> pivot_row_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr][c].is_zero()) ++pr;
    if (pr == rows) throw std::logic_error("solve: dependent columns");
    std::swap(a[r], a[pr]);
    std::swap(b[r], b[pr]);
    const RatQT inv = a[r][c].inverse();
    for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const RatQT f = a[i][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_row_of_col[c] = static_cast<int>(r);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) throw std::logic_error("solve: inconsistent system");
  std::vector<RatQT> x(cols);
  for (size_t c = 0; c < cols; ++c) x[c] = b[pivot_row_of_col[c]];
  return x;
}

// All labels of the same kind and set size, with their spanning vectors
// psi_E = D(phi_E) resp. eta_F = M(phi_F).
std::vector<std::pair<uint64_t, FermionPoly>> module_basis(const ModuleLabel& label) {
  std::vector<std::pair<uint64_t, FermionPoly>> out;
  const int sz = label.size();
  const uint64_t nbit = uint64_t(1) << (label.N - 1);
  for (uint64_t m = 0; m < (uint64_t(1) << label.N); ++m) {
    if (__builtin_popcountll(m) != sz) continue;
    if (label.kind == LabelKind::type0 && !(m & nbit)) continue;
    if (label.kind == LabelKind::type1 && (m & nbit)) continue;
    const FermionPoly phi = FermionPoly::phi(label.N, m);
    out.push_back({m, label.kind == LabelKind::type0 ? op_D(phi) : op_M(phi)});
  }
  return out;
}

// Coordinates of polys over the union of their monomials; rows = monomials.
Matrix coords(const std::vector<FermionPoly>& polys) {
  std::map<uint64_t, size_t> row_of;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms) row_of.emplace(m, row_of.size());
  Matrix a(row_of.size(), std::vector<RatQT>(polys.size(), RatQT::zero()));
  for (size_t j = 0; j < polys.size(); ++j)
    for (const auto& [m, c] : polys[j].terms) a[row_of[m]][j] = c;
  return a;
}

}  // namespace

FermionPoly tau_general(const ModuleLabel& label) {
  check_label(label);
  const std::vector<int> contents = content_vector(label);
  const auto span = module_basis(label);
  std::vector<FermionPoly> basis;
  basis.reserve(span.size());
  for (const auto& [m, v] : span) basis.push_back(v);

  for (int i = 1; i < label.N && basis.size() > 1; ++i) {
    const RatQT eig = RatQT::t_pow(contents[i - 1]);
    std::vector<FermionPoly> images;
    images.reserve(basis.size());
    for (const auto& v : basis) images.push_back(jucys_murphy(i, v) - v.scaled(eig));
    const auto null = nullspace(coords(images), basis.size());
    if (null.empty()) throw std::logic_error("tau_general: eigenspace vanished");
    std::vector<FermionPoly> next;
    for (const auto& x : null) {
      FermionPoly v(label.N);
      for (size_t j = 0; j < basis.size(); ++j)
        if (!x[j].is_zero()) v = v + basis[j].scaled(x[j]);
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  if (basis.size() != 1)
    throw std::logic_error("tau_general: joint eigenspace is not one-dimensional");
  FermionPoly tau = basis[0];

  // Rescale to the triangular normalization in the psi/eta basis.
  std::vector<FermionPoly> cols;
  cols.reserve(span.size());
  size_t self = span.size();
  for (size_t j = 0; j < span.size(); ++j) {
    cols.push_back(span[j].second);
    if (span[j].first == label.set) self = j;
  }
  Matrix a = coords(cols);
  std::map<uint64_t, size_t> row_of;
  for (const auto& p : cols)
    for (const auto& [m, c] : p.terms) row_of.emplace(m, row_of.size());
  std::vector<RatQT> b(row_of.size(), RatQT::zero());
  for (const auto& [m, c] : tau.terms) {
    auto it = row_of.find(m);
    if (it == row_of.end()) throw std::logic_error("tau_general: vector outside module span");
    b[it->second] = c;
  }
  const std::vector<RatQT> x = solve(std::move(a), std::move(b), cols.size());
  if (x[self].is_zero()) throw std::logic_error("tau_general: degenerate normalization");
  const RatQT target = label.kind == LabelKind::type0
                           ? RatQT::t_pow(inv_set(label))
                           : RatQT::one();
  return tau.scaled(target / x[self]);
}

// ---------------------------------------------------------------------------
// RSYT content recognition
// ---------------------------------------------------------------------------

bool is_rsyt_content_vector(const std::vector<int>& contents) {
  const int n = static_cast<int>(contents.size());
  std::vector<int> shape;  // row lengths, weakly decreasing
  for (int entry = n; entry >= 1; --entry) {
    const int ct = contents[entry - 1];
    bool placed = false;
    const int nrows = static_cast<int>(shape.size());
    for (int r = 1; r <= nrows + 1 && !placed; ++r) {
      const int col = (r <= nrows ? shape[r - 1] : 0) + 1;
      if (col - r != ct) continue;
      if (r > 1 && shape[r - 2] < col) continue;  // must stay a Young diagram
      if (r <= nrows) {
        ++shape[r - 1];
      } else {
        shape.push_back(1);
      }
      placed = true;
    }
    if (!placed) return false;
  }
  return true;
}

}  // namespace msuper
