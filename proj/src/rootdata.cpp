#include "endo/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <set>

namespace endo {

namespace {

IntMatrix cartan_for(char family, int n) {
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw RootDataError("B_n requires n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw RootDataError("C_n requires n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) throw RootDataError("D_n requires n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      if (n != 2) throw RootDataError("G_n exists only for n = 2");
      a(0, 1) = -1;
      a(1, 0) = -3;
      break;
    default:
      throw RootDataError(std::string("unknown Cartan type family '") + family + "'");
  }
  return a;
}

constexpr std::size_t kMaxRank = 4;

}  // namespace

RootDatum::RootDatum(std::string label, std::size_t rank, std::vector<IntVector> simple_roots,
                     std::vector<IntVector> simple_coroots, IntMatrix form)
    : label_(std::move(label)),
      rank_(rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)),
      form_(std::move(form)) {
  const std::size_t k = simple_roots_.size();
  if (simple_coroots_.size() != k) throw RootDataError("simple roots and coroots differ in number");
  for (std::size_t i = 0; i < k; ++i)
    if (simple_roots_[i].size() != rank_ || simple_coroots_[i].size() != rank_)
      throw RootDataError("simple root or coroot has wrong length");
  if (form_.rows() != rank_ || form_.cols() != rank_) throw RootDataError("invariant form has wrong shape");
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (form_(i, j) != form_(j, i)) throw RootDataError("invariant form is not symmetric");

  const IntMatrix a = cartan_matrix();
  for (std::size_t i = 0; i < k; ++i) {
    if (a(i, i) != 2) throw RootDataError("Cartan matrix diagonal is not 2");
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw RootDataError("Cartan matrix has a positive off-diagonal entry");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw RootDataError("Cartan matrix zero pattern not symmetric");
    }
  }

  // Closure of the simple roots under simple reflections, tracking coroots and
  // simple-root coefficients alongside.
  struct Entry {
    IntVector root, coroot, coeff;
  };
  std::vector<Entry> found;
  std::map<IntVector, std::size_t> seen;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, 0);
    e[i] = 1;
    if (seen.emplace(simple_roots_[i], found.size()).second) {
      queue.push_back(found.size());
      found.push_back({simple_roots_[i], simple_coroots_[i], e});
    }
  }
  while (!queue.empty()) {
    const Entry cur = found[queue.front()];
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      const Int p = dot(cur.root, simple_coroots_[i]);
      const Int q = dot(simple_roots_[i], cur.coroot);
      Entry next = cur;
      for (std::size_t c = 0; c < rank_; ++c) {
        next.root[c] -= p * simple_roots_[i][c];
        next.coroot[c] -= q * simple_coroots_[i][c];
      }
      next.coeff[i] -= p;
      if (seen.emplace(next.root, found.size()).second) {
        if (found.size() > 10'000) throw RootDataError("root closure does not terminate");
        queue.push_back(found.size());
        found.push_back(std::move(next));
      }
    }
  }

  std::vector<Entry> positive;
  for (const auto& e : found) {
    const bool pos = std::all_of(e.coeff.begin(), e.coeff.end(), [](Int c) { return c >= 0; });
    const bool neg = std::all_of(e.coeff.begin(), e.coeff.end(), [](Int c) { return c <= 0; });
    if (!pos && !neg) throw RootDataError("root with mixed-sign coefficients: simple system invalid");
    if (pos) positive.push_back(e);
  }
  std::stable_sort(positive.begin(), positive.end(), [](const Entry& x, const Entry& y) {
    const Int hx = std::accumulate(x.coeff.begin(), x.coeff.end(), Int{0});
    const Int hy = std::accumulate(y.coeff.begin(), y.coeff.end(), Int{0});
    if (hx != hy) return hx < hy;
    return x.coeff > y.coeff;
  });
  if (2 * positive.size() != found.size()) throw RootDataError("root set is not closed under negation");
  for (const auto& e : positive) {
    roots_.push_back(e.root);
    coroots_.push_back(e.coroot);
    coefficients_.push_back(e.coeff);
  }
  for (const auto& e : positive) {
    roots_.push_back(negate(e.root));
    coroots_.push_back(negate(e.coroot));
    coefficients_.push_back(negate(e.coeff));
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
  for (const auto& r : roots_)
    if (!seen.count(r)) throw RootDataError("root set is not closed under negation");

  // Weyl invariance of the form: B(s v, s u) = B(v, u) for simple reflections.
  for (std::size_t i = 0; i < k; ++i) {
    const IntMatrix s = simple_reflection(i);
    if (s.transpose() * form_ * s != form_)
      throw RootDataError("invariant form is not Weyl-invariant");
  }
}

std::optional<std::size_t> RootDatum::find_root(const IntVector& root) const {
  const auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootDatum::negative_of(std::size_t root_index) const {
  const std::size_t p = num_positive_roots();
  return root_index < p ? root_index + p : root_index - p;
}

IntMatrix RootDatum::cartan_matrix() const {
  const std::size_t k = simple_roots_.size();
  IntMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = dot(simple_roots_[i], simple_coroots_[j]);
  return a;
}

IntMatrix RootDatum::reflection(std::size_t root_index) const {
  const IntVector& alpha = roots_.at(root_index);
  const IntVector& coroot = coroots_.at(root_index);
  IntMatrix s = IntMatrix::identity(rank_);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) s(r, c) -= coroot[r] * alpha[c];
  return s;
}

IntMatrix RootDatum::simple_reflection(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(rank_);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) s(r, c) -= simple_coroots_.at(i)[r] * simple_roots_.at(i)[c];
  return s;
}

bool RootDatum::simply_connected() const {
  if (simple_coroots_.size() != rank_) return false;
  IntMatrix m(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t r = 0; r < rank_; ++r) m(r, j) = simple_coroots_[j][r];
  return std::abs(determinant(m)) == 1;
}

IntMatrix default_invariant_form(const IntMatrix& a) {
  const std::size_t n = a.rows();
  // B(alpha_i^vee, alpha_j^vee) = c_i A_ij with c_i A_ij = c_j A_ji.
  std::vector<Rational> c(n, Rational(0));
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    c[start] = 1;
    component[start] = components;
    std::deque<std::size_t> q{start};
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        const Rational cj = c[i] * Rational(a(i, j), a(j, i));
        if (component[j] < 0) {
          component[j] = components;
          c[j] = cj;
          q.push_back(j);
        } else if (c[j] != cj) {
          throw RootDataError("Cartan matrix is not symmetrizable");
        }
      }
    }
    // Smallest coefficient in the component becomes 1 (short coroots).
    Rational least = c[start];
    for (std::size_t j = 0; j < n; ++j)
      if (component[j] == components) least = std::min(least, c[j]);
    for (std::size_t j = 0; j < n; ++j)
      if (component[j] == components) c[j] /= least;
    ++components;
  }
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = c[i] * a(i, j);
      if (v.denominator() != 1) throw RootDataError("invariant form is not integral");
      b(i, j) = v.numerator();
    }
  return b;
}

RootDatum build_root_datum(const std::string& type) {
  std::string normalized;
  for (std::size_t i = 0; i < type.size(); ++i) {
    // accept 'x', '*' and the UTF-8 multiplication sign as product separators
    if (type.compare(i, 2, "\xC3\x97") == 0) {
      normalized += 'x';
      ++i;
    } else if (type[i] == '*' || type[i] == 'X' || type[i] == 'x') {
      normalized += 'x';
    } else if (!std::isspace(static_cast<unsigned char>(type[i]))) {
      normalized += static_cast<char>(std::toupper(static_cast<unsigned char>(type[i])));
    }
  }
  const std::regex factor_re("([ABCDG])([0-9]+)");
  std::vector<IntMatrix> blocks;
  std::size_t pos = 0;
  while (pos <= normalized.size()) {
    const std::size_t next = normalized.find('x', pos);
    const std::string factor = normalized.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch m;
    if (!std::regex_match(factor, m, factor_re)) throw RootDataError("unknown type label '" + type + "'");
    const int n = std::stoi(m[2].str());
    if (n < 1 || n > static_cast<int>(kMaxRank))
      throw RootDataError("rank outside supported range 1.." + std::to_string(kMaxRank) + " in '" + type + "'");
    blocks.push_back(cartan_for(m[1].str()[0], n));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  std::size_t rank = 0;
  for (const auto& b : blocks) rank += b.rows();
  if (rank > kMaxRank) throw RootDataError("total rank exceeds " + std::to_string(kMaxRank) + " in '" + type + "'");

  IntMatrix a(rank, rank);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) a(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  std::vector<IntVector> roots, coroots;
  for (std::size_t i = 0; i < rank; ++i) {
    roots.push_back(a.row(i));
    IntVector e(rank, 0);
    e[i] = 1;
    coroots.push_back(e);
  }
  return RootDatum(normalized, rank, std::move(roots), std::move(coroots), default_invariant_form(a));
}

std::vector<WeylElement> generate_group(std::size_t rank, const std::vector<IntMatrix>& generators,
                                        std::size_t cap) {
  std::vector<WeylElement> elements{{IntMatrix::identity(rank), {}}};
  std::map<IntMatrix, std::size_t> seen{{elements.front().matrix, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      IntMatrix next = elements[head].matrix * generators[g];
      if (seen.count(next)) continue;
      if (elements.size() >= cap)
        throw RootDataError("group order exceeds cap of " + std::to_string(cap));
      std::vector<int> word = elements[head].word;
      word.push_back(static_cast<int>(g));
      seen.emplace(next, elements.size());
      elements.push_back({std::move(next), std::move(word)});
    }
  }
  return elements;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, std::size_t cap) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < datum.semisimple_rank(); ++i) gens.push_back(datum.simple_reflection(i));
  // Breadth-first discovery with generators in index order yields the
  // shortlex-minimal reduced word for every element.
  return generate_group(datum.rank(), gens, cap);
}

int weyl_sign(const WeylElement& w) { return static_cast<int>(determinant(w.matrix)); }

IntMatrix inverse_of(const IntMatrix& w) {
  try {
    return unimodular_inverse(w);
  } catch (const std::domain_error&) {
    throw RootDataError("matrix is not unimodular: " + w.to_string());
  }
}

IntVector act_on_character(const IntMatrix& w, const IntVector& character) {
  // (w.alpha)(lambda) = alpha(w^{-1} lambda)
  return inverse_of(w).transpose() * character;
}

bool contains(const std::vector<WeylElement>& group, const IntMatrix& m) {
  return std::any_of(group.begin(), group.end(), [&](const WeylElement& g) { return g.matrix == m; });
}

std::vector<WeylElement> coset_representatives(const std::vector<WeylElement>& group,
                                               const std::vector<WeylElement>& subgroup,
                                               CosetSide side) {
  std::set<IntMatrix> in_group;
  for (const auto& g : group) in_group.insert(g.matrix);
  std::set<IntMatrix> in_sub;
  for (const auto& h : subgroup) {
    if (!in_group.count(h.matrix)) throw RootDataError("subgroup is not contained in group");
    in_sub.insert(h.matrix);
  }
  if (subgroup.empty()) throw RootDataError("subgroup is empty");
  for (const auto& x : subgroup)
    for (const auto& y : subgroup)
      if (!in_sub.count(x.matrix * y.matrix)) throw RootDataError("subgroup is not closed under composition");

  std::set<IntMatrix> covered;
  std::vector<WeylElement> reps;
  for (const auto& g : group) {
    if (covered.count(g.matrix)) continue;
    reps.push_back(g);
    for (const auto& h : subgroup) covered.insert(side == CosetSide::left ? g.matrix * h.matrix : h.matrix * g.matrix);
  }
  return reps;
}

}  // namespace endo
