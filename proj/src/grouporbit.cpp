#include "grouporbit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace cibound {

const char* group_kind_name(GroupKind k) noexcept {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
    case GroupKind::PGL: return "PGL";
  }
  return "?";
}

const char* stab_method_name(StabMethod m) noexcept {
  return m == StabMethod::Exhaustive ? "Exhaustive" : "OrbitBFS";
}

std::string GroupSpec::to_string() const {
  return std::string(group_kind_name(kind)) + "_" + std::to_string(rank) + "(" + field.spec() + ")";
}

GroupSpec make_group(GroupKind kind, int rank, const Field& field) {
  if (rank < 2) throw Error(Errc::InvalidInput, "group rank must be >= 2, got " + std::to_string(rank));
  if (!field.is_finite()) throw Error(Errc::UnsupportedField, "matrix groups need a finite field");
  return GroupSpec{kind, rank, field};
}

BigInt group_order(const GroupSpec& g) {
  const BigInt q = static_cast<unsigned long>(g.field.ff().order());
  BigInt qm;
  mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g.rank));
  BigInt r = 1, qi = 1;
  for (int i = 0; i < g.rank; ++i) {
    r *= qm - qi;
    qi *= q;
  }
  if (g.kind != GroupKind::GL) r /= q - 1;
  return r;
}

std::vector<Matrix> generators(const GroupSpec& g) {
  const FiniteField& f = g.field.ff();
  const Code w = f.primitive();
  std::vector<Matrix> gens;
  for (int i = 0; i < g.rank; ++i)
    for (int j = 0; j < g.rank; ++j) {
      if (i == j) continue;
      Code c = 1;
      for (unsigned k = 0; k < f.degree(); ++k) {
        Matrix t = Matrix::identity(g.rank, g.field);
        t(i, j) = FieldElement(g.field, c);
        gens.push_back(std::move(t));
        c = f.mul(c, w);
      }
    }
  if (g.kind != GroupKind::SL && w != 1) {
    Matrix dgn = Matrix::identity(g.rank, g.field);
    dgn(0, 0) = FieldElement(g.field, w);
    gens.push_back(std::move(dgn));
  }
  return gens;
}

Matrix canonical_element(const GroupSpec& g, const Matrix& a) {
  if (g.kind != GroupKind::PGL) return a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) {
        const FieldElement s = a(i, j).inverse();
        Matrix r = a;
        for (std::size_t u = 0; u < r.rows(); ++u)
          for (std::size_t v = 0; v < r.cols(); ++v) r(u, v) = r(u, v) * s;
        return r;
      }
  throw Error(Errc::InvalidInput, "zero matrix is not a group element");
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Code> matrix_codes(const Matrix& a) {
  std::vector<Code> c(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c[i * a.cols() + j] = a(i, j).code();
  return c;
}

Matrix codes_matrix(const std::vector<Code>& c, std::size_t m, const Field& field) {
  Matrix a(m, m, field);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = FieldElement(field, c[i * m + j]);
  return a;
}

// Degree-d forms as dense code vectors over monomial_basis(n, d), and the
// substitution x -> A x at that level.
class FormAction {
 public:
  FormAction(int n, int d, const FiniteField& f) : n_(n), d_(d), f_(f) {
    const std::size_t nv = static_cast<std::size_t>(n + 1);
    sizes_.push_back(1);
    std::vector<std::map<Exponents, std::uint32_t>> index(static_cast<std::size_t>(d + 1));
    std::vector<std::vector<Exponents>> bases(static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {
      bases[k] = monomial_basis(n, k);
      for (std::size_t i = 0; i < bases[k].size(); ++i) index[k].emplace(bases[k][i], static_cast<std::uint32_t>(i));
      if (k > 0) sizes_.push_back(bases[k].size());
    }
    times_var_.resize(static_cast<std::size_t>(d + 1));
    parent_.resize(static_cast<std::size_t>(d + 1));
    for (int k = 1; k <= d; ++k) {
      auto& tv = times_var_[k];
      tv.resize(bases[k - 1].size() * nv);
      for (std::size_t b = 0; b < bases[k - 1].size(); ++b)
        for (std::size_t m = 0; m < nv; ++m) {
          Exponents e = bases[k - 1][b];
          ++e[m];
          tv[b * nv + m] = index[k].at(e);
        }
      for (const auto& e : bases[k]) {
        std::size_t j = 0;
        while (e[j] == 0) ++j;
        Exponents parent = e;
        --parent[j];
        parent_[k].emplace_back(index[k - 1].at(parent), static_cast<std::uint32_t>(j));
      }
    }
  }

  std::size_t size() const noexcept { return sizes_.back(); }
  const FiniteField& field() const noexcept { return f_; }

  // Dense image (A x)^a of every degree-d monomial, row-major size() x size().
  void monomial_images(const Code* a, std::vector<Code>& out) const {
    const std::size_t nv = static_cast<std::size_t>(n_ + 1);
    std::vector<Code> prev{1}, cur;
    for (int k = 1; k <= d_; ++k) {
      const std::size_t sz = sizes_[k], psz = sizes_[k - 1];
      cur.assign(sz * sz, 0);
      const auto& tv = times_var_[k];
      for (std::size_t r = 0; r < sz; ++r) {
        const auto [par, j] = parent_[k][r];
        const Code* src = &prev[par * psz];
        Code* dst = &cur[r * sz];
        const Code* row = a + j * nv;
        for (std::size_t b = 0; b < psz; ++b) {
          if (src[b] == 0) continue;
          for (std::size_t m = 0; m < nv; ++m)
            if (row[m] != 0) {
              Code& slot = dst[tv[b * nv + m]];
              slot = f_.add(slot, f_.mul(src[b], row[m]));
            }
        }
      }
      prev.swap(cur);
    }
    out.swap(prev);
  }

  void apply(const std::vector<Code>& images, const Code* form, Code* out) const {
    const std::size_t sz = size();
    std::fill(out, out + sz, 0);
    for (std::size_t r = 0; r < sz; ++r) {
      if (form[r] == 0) continue;
      const Code* img = &images[r * sz];
      for (std::size_t c = 0; c < sz; ++c)
        if (img[c] != 0) out[c] = f_.add(out[c], f_.mul(form[r], img[c]));
    }
  }

 private:
  int n_, d_;
  const FiniteField& f_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::uint32_t>> times_var_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> parent_;
};

std::vector<Code> dense_codes(const HomogeneousForm& f) {
  const auto basis = monomial_basis(f.n(), f.degree());
  std::vector<Code> v(basis.size(), 0);
  std::size_t i = 0;
  for (const auto& [e, c] : f.terms()) {
    while (basis[i] != e) ++i;
    v[i] = c.code();
  }
  return v;
}

// Scales so the first nonzero coordinate is 1.
void make_monic(const FiniteField& f, Code* v, std::size_t n) {
  std::size_t i = 0;
  while (i < n && v[i] == 0) ++i;
  if (i == n || v[i] == 1) return;
  const Code s = f.inv(v[i]);
  for (std::size_t j = i; j < n; ++j)
    if (v[j]) v[j] = f.mul(v[j], s);
}

bool is_scalar(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i == j ? a(i, j) != a(0, 0) : !a(i, j).is_zero()) return false;
  return true;
}

// Fixed-width packing of code vectors into 64-bit words.
class Packer {
 public:
  Packer(std::size_t n, std::uint64_t q) : n_(n) {
    while ((std::uint64_t(1) << bits_) < q) ++bits_;
    per_word_ = 64 / bits_;
    words_ = (n + per_word_ - 1) / per_word_;
  }
  std::size_t words() const noexcept { return words_; }
  void pack(const Code* v, std::uint64_t* out) const {
    std::fill(out, out + words_, 0);
    for (std::size_t i = 0; i < n_; ++i) out[i / per_word_] |= v[i] << (bits_ * (i % per_word_));
  }
  void unpack(const std::uint64_t* in, Code* v) const {
    const std::uint64_t mask = bits_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << bits_) - 1;
    for (std::size_t i = 0; i < n_; ++i) v[i] = (in[i / per_word_] >> (bits_ * (i % per_word_))) & mask;
  }

 private:
  std::size_t n_;
  unsigned bits_ = 1;
  std::size_t per_word_ = 64, words_ = 1;
};

// Insert-only set of packed keys; the key arena records insertion order and
// doubles as the BFS queue.
class OrbitTable {
 public:
  explicit OrbitTable(std::size_t words) : words_(words), slots_(1024, 0) {}

  std::size_t size() const noexcept { return count_; }
  const std::uint64_t* key(std::size_t i) const { return &keys_[i * words_]; }

  // Index of the key, inserting it if new; `inserted` reports which.
  std::size_t insert(const std::uint64_t* k, bool& inserted) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1, h = hash(k) & mask;
    while (slots_[h] != 0) {
      const std::size_t idx = slots_[h] - 1;
      if (std::equal(k, k + words_, key(idx))) {
        inserted = false;
        return idx;
      }
      h = (h + 1) & mask;
    }
    keys_.insert(keys_.end(), k, k + words_);
    slots_[h] = static_cast<std::uint32_t>(++count_);
    inserted = true;
    return count_ - 1;
  }

 private:
  std::uint64_t hash(const std::uint64_t* k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < words_; ++i) {
      std::uint64_t x = k[i] + h;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      h = x ^ (x >> 31);
    }
    return h;
  }
  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t h = hash(key(i)) & mask;
      while (fresh[h] != 0) h = (h + 1) & mask;
      fresh[h] = static_cast<std::uint32_t>(i + 1);
    }
    slots_.swap(fresh);
  }

  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slots_;
};

void check_form(const HomogeneousForm& f, const GroupSpec& g) {
  if (f.is_zero()) throw Error(Errc::InvalidInput, "stabilizer of the zero form");
  if (f.field() != g.field) throw Error(Errc::FieldMismatch, "form over " + f.field().spec() + ", group over " + g.field.spec());
  if (f.nvars() != g.rank)
    throw Error(Errc::InvalidInput, "form has " + std::to_string(f.nvars()) + " variables but the group has rank " + std::to_string(g.rank));
}

bool same_up_to_kind(const GroupSpec& g, const Matrix& a, const Matrix& b) {
  if (g.kind != GroupKind::PGL) return a == b;
  return canonical_element(g, a) == canonical_element(g, b);
}

void add_found(const GroupSpec& g, std::vector<Matrix>& found, const Matrix& s, std::size_t cap) {
  if (found.size() >= cap) return;
  if (g.kind == GroupKind::PGL ? is_scalar(s) : s == Matrix::identity(s.rows(), s.field())) return;
  for (const auto& x : found)
    if (same_up_to_kind(g, x, s)) return;
  found.push_back(canonical_element(g, s));
}

StabilizerReport orbit_bfs(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts) {
  const FiniteField& ff = g.field.ff();
  const bool projective = g.kind == GroupKind::PGL;
  FormAction action(f.n(), f.degree(), ff);
  const std::size_t sz = action.size();
  const auto gens = generators(g);

  std::vector<std::vector<Code>> gen_images(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) action.monomial_images(matrix_codes(gens[i]).data(), gen_images[i]);
  // Sparse rows of each image: (target, coefficient) per source monomial.
  struct Sparse {
    std::vector<std::uint32_t> start, target;
    std::vector<Code> coef;
  };
  std::vector<Sparse> sparse(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto& s = sparse[i];
    for (std::size_t r = 0; r < sz; ++r) {
      s.start.push_back(static_cast<std::uint32_t>(s.target.size()));
      for (std::size_t c = 0; c < sz; ++c)
        if (gen_images[i][r * sz + c] != 0) {
          s.target.push_back(static_cast<std::uint32_t>(c));
          s.coef.push_back(gen_images[i][r * sz + c]);
        }
    }
    s.start.push_back(static_cast<std::uint32_t>(s.target.size()));
  }

  Packer packer(sz, ff.order());
  OrbitTable table(packer.words());
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint8_t> via{0};
  std::vector<Code> cur(sz), next(sz);
  std::vector<std::uint64_t> key(packer.words());

  std::vector<Code> start = dense_codes(f);
  if (projective) make_monic(ff, start.data(), sz);
  packer.pack(start.data(), key.data());
  bool inserted = false;
  table.insert(key.data(), inserted);

  // Word from the root to orbit element i, as a product of generators.
  auto transversal = [&](std::size_t i) {
    std::vector<std::uint8_t> word;
    while (i != 0) {
      word.push_back(via[i]);
      i = parent[i];
    }
    Matrix u = Matrix::identity(g.rank, g.field);
    for (auto it = word.rbegin(); it != word.rend(); ++it) u = u * gens[*it];
    return u;
  };

  std::vector<Matrix> found;
  std::size_t schreier_attempts = 0;
  const std::size_t max_attempts = opts.max_generators * 8;
  for (std::size_t i = 0; i < table.size(); ++i) {
    packer.unpack(table.key(i), cur.data());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const auto& s = sparse[gi];
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t r = 0; r < sz; ++r) {
        if (cur[r] == 0) continue;
        for (std::uint32_t t = s.start[r]; t < s.start[r + 1]; ++t)
          next[s.target[t]] = ff.add(next[s.target[t]], ff.mul(cur[r], s.coef[t]));
      }
      if (projective) make_monic(ff, next.data(), sz);
      packer.pack(next.data(), key.data());
      const std::size_t j = table.insert(key.data(), inserted);
      if (inserted) {
        if (table.size() > opts.orbit_budget)
          throw Error(Errc::OrbitBudgetExceeded, "orbit exceeds " + std::to_string(opts.orbit_budget) + " forms under " + g.to_string());
        parent.push_back(static_cast<std::uint32_t>(i));
        via.push_back(static_cast<std::uint8_t>(gi));
      } else if (found.size() < opts.max_generators && schreier_attempts < max_attempts && !(parent[j] == i && via[j] == gi && j != 0)) {
        ++schreier_attempts;
        add_found(g, found, transversal(i) * gens[gi] * inverse(transversal(j)), opts.max_generators);
      }
    }
  }

  StabilizerReport rep;
  rep.group = g;
  rep.form = f;
  rep.method = StabMethod::OrbitBFS;
  rep.group_order = group_order(g);
  rep.orbit_size = static_cast<unsigned long>(table.size());
  if (rep.group_order % rep.orbit_size != 0)
    throw Error(Errc::Internal, "orbit size " + rep.orbit_size.get_str() + " does not divide |G| = " + rep.group_order.get_str());
  rep.stabilizer_order = rep.group_order / rep.orbit_size;
  rep.generators_found = std::move(found);
  return rep;
}

// Iterates over matrices whose row 0 has first nonzero entry 1 and whose
// other rows are arbitrary, invoking visit(codes) on the invertible ones
// together with their determinant.
template <class Visit>
void for_each_normalized_invertible(const FiniteField& f, std::size_t m, Visit&& visit) {
  const std::uint64_t q = f.order();
  std::vector<Code> a(m * m, 0);
  for (std::size_t lead = m; lead-- > 0;) {
    std::fill(a.begin(), a.end(), 0);
    a[lead] = 1;
    while (true) {
      const Code det = determinant_codes(f, a, m);
      if (det != 0) visit(a, det);
      // Advance the mixed-radix counter over entries after `lead` in row 0
      // and all entries of rows 1..m-1.
      std::size_t pos = m * m;
      bool done = true;
      while (pos-- > lead + 1) {
        if (++a[pos] < q) {
          done = false;
          break;
        }
        a[pos] = 0;
      }
      if (done) break;
    }
  }
}

StabilizerReport exhaustive(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts) {
  const BigInt order = group_order(g);
  if (order > static_cast<unsigned long>(opts.exhaustive_ceiling))
    throw Error(Errc::UnsupportedSize, "|" + g.to_string() + "| = " + order.get_str() + " exceeds the exhaustive ceiling " + std::to_string(opts.exhaustive_ceiling));
  const FiniteField& ff = g.field.ff();
  const bool projective = g.kind == GroupKind::PGL;
  FormAction action(f.n(), f.degree(), ff);
  const std::size_t sz = action.size(), m = static_cast<std::size_t>(g.rank);
  std::vector<Code> target = dense_codes(f);
  if (projective) make_monic(ff, target.data(), sz);
  std::vector<Code> images, out(sz);
  std::uint64_t count = 0, stab = 0;
  std::vector<Matrix> found;

  auto test = [&](const std::vector<Code>& a) {
    ++count;
    action.monomial_images(a.data(), images);
    action.apply(images, target.data(), out.data());
    if (projective) make_monic(ff, out.data(), sz);
    if (out == target) {
      ++stab;
      if (found.size() < opts.max_generators) add_found(g, found, codes_matrix(a, m, g.field), opts.max_generators);
    }
  };

  for_each_normalized_invertible(ff, m, [&](std::vector<Code>& a, Code det) {
    if (g.kind == GroupKind::PGL) {
      test(a);
    } else if (g.kind == GroupKind::SL) {
      std::vector<Code> b = a;
      const Code s = ff.inv(det);
      for (std::size_t j = 0; j < m; ++j) b[j] = ff.mul(b[j], s);
      test(b);
    } else {
      std::vector<Code> b = a;
      for (Code s = 1; s < ff.order(); ++s) {
        for (std::size_t j = 0; j < m; ++j) b[j] = ff.mul(a[j], s);
        test(b);
      }
    }
  });
  if (order != static_cast<unsigned long>(count))
    throw Error(Errc::Internal, "enumerated " + std::to_string(count) + " elements of " + g.to_string() + ", expected " + order.get_str());

  StabilizerReport rep;
  rep.group = g;
  rep.form = f;
  rep.method = StabMethod::Exhaustive;
  rep.group_order = order;
  rep.stabilizer_order = static_cast<unsigned long>(stab);
  if (order % rep.stabilizer_order != 0) throw Error(Errc::Internal, "stabilizer order does not divide |G|");
  rep.orbit_size = order / rep.stabilizer_order;
  rep.generators_found = std::move(found);
  return rep;
}

}  // namespace

std::vector<Matrix> enumerate_group(const GroupSpec& g, std::uint64_t ceiling) {
  const BigInt order = group_order(g);
  if (order > static_cast<unsigned long>(ceiling))
    throw Error(Errc::UnsupportedSize, "|" + g.to_string() + "| = " + order.get_str() + " exceeds " + std::to_string(ceiling));
  const FiniteField& ff = g.field.ff();
  const std::size_t m = static_cast<std::size_t>(g.rank);
  std::vector<Matrix> out;
  for_each_normalized_invertible(ff, m, [&](std::vector<Code>& a, Code det) {
    if (g.kind == GroupKind::PGL) {
      out.push_back(codes_matrix(a, m, g.field));
    } else if (g.kind == GroupKind::SL) {
      std::vector<Code> b = a;
      const Code s = ff.inv(det);
      for (std::size_t j = 0; j < m; ++j) b[j] = ff.mul(b[j], s);
      out.push_back(codes_matrix(b, m, g.field));
    } else {
      std::vector<Code> b = a;
      for (Code s = 1; s < ff.order(); ++s) {
        for (std::size_t j = 0; j < m; ++j) b[j] = ff.mul(a[j], s);
        out.push_back(codes_matrix(b, m, g.field));
      }
    }
  });
  return out;
}

std::vector<Matrix> group_closure(const GroupSpec& g, const std::vector<Matrix>& gens, std::size_t limit) {
  std::set<std::vector<Code>> seen;
  std::vector<Matrix> elems{Matrix::identity(g.rank, g.field)};
  seen.insert(matrix_codes(elems[0]));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      Matrix x = canonical_element(g, elems[i] * s);
      if (seen.insert(matrix_codes(x)).second) {
        if (elems.size() >= limit) throw Error(Errc::UnsupportedSize, "closure exceeds " + std::to_string(limit) + " elements");
        elems.push_back(std::move(x));
      }
    }
  return elems;
}

bool fixes(const GroupSpec& g, const Matrix& a, const HomogeneousForm& f) {
  HomogeneousForm image = substitute_linear(f, a);
  if (g.kind == GroupKind::PGL) return image.monic() == f.monic();
  return image == f;
}

StabilizerReport stabilizer(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts) {
  check_form(f, g);
  const auto t0 = Clock::now();
  StabilizerReport rep = opts.method == StabMethod::Exhaustive ? exhaustive(f, g, opts) : orbit_bfs(f, g, opts);
  if (rep.orbit_size * rep.stabilizer_order != rep.group_order) throw Error(Errc::Internal, "orbit-stabilizer identity failed");
  rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

StabilizerReport linear_stabilizer(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts) {
  if (g.kind == GroupKind::PGL) throw Error(Errc::InvalidInput, "linear stabilizer needs GL or SL");
  return stabilizer(f, g, opts);
}

StabilizerReport projective_stabilizer(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts) {
  if (g.kind != GroupKind::PGL) throw Error(Errc::InvalidInput, "projective stabilizer needs PGL");
  return stabilizer(f, g, opts);
}

VerifyReport verify_divisibility(int n, int d, const Field& field, std::size_t samples, std::uint64_t seed, const VerifyOptions& opts) {
  if (!field.is_finite()) throw Error(Errc::UnsupportedField, "verification runs over a finite field");
  if (samples == 0) throw Error(Errc::InvalidInput, "samples must be >= 1");
  VerifyReport rep;
  rep.n = n;
  rep.d = d;
  rep.field = field;
  rep.samples = samples;
  rep.seed = seed;
  rep.vector_bound = vector_bound(n, d);
  rep.projective_bound = projective_bound(n, d);
  const std::uint64_t p = field.characteristic();
  const GroupSpec gl = make_group(GroupKind::GL, n + 1, field);
  const GroupSpec pgl = make_group(GroupKind::PGL, n + 1, field);
  std::mt19937_64 rng(seed);
  const std::size_t max_draws = opts.draws_per_sample * samples;
  for (std::size_t s = 0; rep.tested < samples && s < max_draws; ++s) {
    SampleReport sr;
    sr.index = s;
    sr.form = random_form(n, d, field, rng);
    if (sr.form.is_zero()) {
      sr.smoothness = Smoothness::Singular;
    } else {
      sr.smoothness = is_singular(FormTuple({sr.form}), opts.max_ext_degree).status;
    }
    if (sr.smoothness == Smoothness::Singular) ++rep.skipped_singular;
    if (sr.smoothness == Smoothness::Inconclusive) ++rep.skipped_inconclusive;
    if (sr.smoothness == Smoothness::Smooth) {
      ++rep.tested;
      sr.linear = linear_stabilizer(sr.form, gl, opts.stabilizer);
      sr.projective = projective_stabilizer(sr.form, pgl, opts.stabilizer);
      sr.linear_verdict = divisibility_verdict(sr.linear->stabilizer_order, p, rep.vector_bound);
      sr.projective_verdict = divisibility_verdict(sr.projective->stabilizer_order, p, rep.projective_bound);
      if (!sr.linear_verdict->divides || !sr.projective_verdict->divides) {
        if (opts.throw_on_violation)
          throw Error(Errc::DivisibilityViolation, "stabilizer of " + format_form(sr.form) + " over " + field.spec() + " violates the bound");
        rep.all_divide = false;
        if (!rep.counterexample) rep.counterexample = rep.reports.size();
      }
    }
    rep.reports.push_back(std::move(sr));
  }
  if (rep.tested * 2 < samples)
    throw Error(Errc::InsufficientSmoothSamples, "only " + std::to_string(rep.tested) + " of " + std::to_string(rep.reports.size()) +
                                                     " draws were certified smooth (wanted " + std::to_string(samples) + ")");
  return rep;
}

}  // namespace cibound
