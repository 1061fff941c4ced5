#include "arrstab/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace arrstab {

std::string to_string(GroupKind g) { return g == GroupKind::S ? "S" : "W"; }

GroupKind parse_group(std::string_view s) {
  if (s == "S") return GroupKind::S;
  if (s == "W") return GroupKind::W;
  throw UsageError("unknown group '" + std::string(s) + "' (expected S or W)");
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

int Irrep::size() const {
  return std::accumulate(plus.begin(), plus.end(), 0) + std::accumulate(minus.begin(), minus.end(), 0);
}

std::string Irrep::name(GroupKind g) const {
  if (g == GroupKind::S) return partition_string(plus);
  return "(" + partition_string(plus) + "," + partition_string(minus) + ")";
}

std::vector<SignedCycleType> conjugacy_classes(GroupKind g, int n) {
  std::vector<SignedCycleType> out;
  if (g == GroupKind::S) {
    for (auto& p : partitions(n)) out.push_back({p, {}});
    return out;
  }
  for (int m = 0; m <= n; ++m)
    for (const auto& plus : partitions(n - m))
      for (const auto& minus : partitions(m)) out.push_back({plus, minus});
  return out;
}

std::vector<Irrep> irreducibles(GroupKind g, int n) {
  std::vector<Irrep> out;
  for (const auto& c : conjugacy_classes(g, n)) out.push_back({c.pos, c.neg});
  return out;
}

std::string class_key(GroupKind g, const SignedCycleType& c) {
  if (g == GroupKind::S) return partition_string(c.pos);
  return c.key();
}

namespace {

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int part : p) ++m[part];
  return m;
}

struct ClassIndex {
  std::vector<SignedCycleType> classes;
  std::map<SignedCycleType, std::size_t> index;
};

const ClassIndex& class_index(GroupKind g, int n) {
  static std::mutex mutex;
  static std::map<std::pair<GroupKind, int>, std::unique_ptr<ClassIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{g, n}];
  if (!slot) {
    slot = std::make_unique<ClassIndex>();
    slot->classes = conjugacy_classes(g, n);
    for (std::size_t i = 0; i < slot->classes.size(); ++i) slot->index.emplace(slot->classes[i], i);
  }
  return *slot;
}

// Splits the cycles of c into c1 of total size k and the rest c2, calling
// visit(c1, c2, weight) where weight = z_c / (z_c1 z_c2).
void for_each_split(const SignedCycleType& c, int k,
                    const std::function<void(const SignedCycleType&, const SignedCycleType&, const Integer&)>& visit) {
  struct Kind {
    int length;
    bool negative;
    int count;
  };
  std::vector<Kind> kinds;
  for (auto [len, cnt] : multiplicities(c.pos)) kinds.push_back({len, false, cnt});
  for (auto [len, cnt] : multiplicities(c.neg)) kinds.push_back({len, true, cnt});
  std::vector<int> take(kinds.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == kinds.size()) {
      if (left != 0) return;
      SignedCycleType c1, c2;
      Integer weight = 1;
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        auto& a = kinds[i].negative ? c1.neg : c1.pos;
        auto& b = kinds[i].negative ? c2.neg : c2.pos;
        for (int t = 0; t < take[i]; ++t) a.push_back(kinds[i].length);
        for (int t = take[i]; t < kinds[i].count; ++t) b.push_back(kinds[i].length);
        weight *= binomial(kinds[i].count, take[i]);
      }
      for (auto* v : {&c1.pos, &c1.neg, &c2.pos, &c2.neg}) std::sort(v->rbegin(), v->rend());
      visit(c1, c2, weight);
      return;
    }
    for (int t = 0; t <= kinds[idx].count && t * kinds[idx].length <= left; ++t) {
      take[idx] = t;
      rec(idx + 1, left - t * kinds[idx].length);
    }
    take[idx] = 0;
  };
  rec(0, k);
}

Partition merged_lengths(const SignedCycleType& c) {
  Partition p = c.pos;
  p.insert(p.end(), c.neg.begin(), c.neg.end());
  std::sort(p.rbegin(), p.rend());
  return p;
}

}  // namespace

Integer group_order(GroupKind g, int n) {
  Integer o = factorial(n);
  if (g == GroupKind::W) o <<= n;
  return o;
}

Integer centralizer_order(GroupKind g, const SignedCycleType& c) {
  Integer z = 1;
  const int base = g == GroupKind::W ? 2 : 1;
  for (const auto* part : {&c.pos, &c.neg})
    for (auto [len, cnt] : multiplicities(*part)) {
      Integer f = base * len;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(cnt));
      z *= pw * factorial(cnt);
    }
  return z;
}

Integer class_size(GroupKind g, const SignedCycleType& c) { return group_order(g, c.size()) / centralizer_order(g, c); }

ClassFunction::ClassFunction(GroupKind g, int n) : group_(g), n_(n) {
  if (n < 0) throw UsageError("group size must be nonnegative");
  values_.assign(class_index(g, n).classes.size(), Rational(0));
}

const std::vector<SignedCycleType>& ClassFunction::classes() const { return class_index(group_, n_).classes; }

std::size_t ClassFunction::index_of(const SignedCycleType& c) const {
  const auto& idx = class_index(group_, n_).index;
  const auto it = idx.find(c);
  if (it == idx.end()) throw UsageError("no class " + class_key(group_, c) + " in " + to_string(group_) + std::to_string(n_));
  return it->second;
}

Rational ClassFunction::degree() const {
  SignedCycleType id;
  id.pos.assign(static_cast<std::size_t>(n_), 1);
  return at(id);
}

void ClassFunction::check_compatible(const ClassFunction& o) const {
  if (group_ != o.group_ || n_ != o.n_) throw UsageError("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.check_compatible(b);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  return out;
}

namespace {

nlohmann::ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q(j.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw UsageError("expected an integer or a rational string");
}

}  // namespace

nlohmann::ordered_json ClassFunction::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = to_string(group_);
  j["n"] = n_;
  auto vals = nlohmann::ordered_json::object();
  const auto& cls = classes();
  for (std::size_t i = 0; i < values_.size(); ++i) vals[class_key(group_, cls[i])] = rational_json(values_[i]);
  j["values"] = std::move(vals);
  return j;
}

ClassFunction class_function_from_json(const nlohmann::json& j) {
  ClassFunction f(parse_group(j.at("group").get<std::string>()), j.at("n").get<int>());
  const auto& vals = j.at("values");
  if (vals.size() != f.class_count()) throw UsageError("class function must list every class");
  for (const auto& [key, value] : vals.items()) {
    SignedCycleType c;
    if (f.group() == GroupKind::S) {
      c = parse_cycle_type(key.substr(0, key.size() - 1) + "|)");
    } else {
      c = parse_cycle_type(key);
    }
    f.at(c) = rational_from_json(value);
  }
  return f;
}

Integer sn_irr_char(const Partition& lambda, const Partition& mu) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n != std::accumulate(mu.begin(), mu.end(), 0)) throw UsageError("character and class of different sizes");
  // Murnaghan-Nakayama on beta-sets: removing a rim hook of length k moves one bead down by k.
  std::function<Integer(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& beta,
                                                                         std::size_t idx) -> Integer {
    if (idx == mu.size()) return 1;
    const int k = mu[idx];
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int b = beta[i] - k;
      if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
      int between = 0;
      for (int x : beta)
        if (x > b && x < beta[i]) ++between;
      std::vector<int> next = beta;
      next[i] = b;
      const Integer v = rec(next, idx + 1);
      total += between % 2 ? -v : v;
    }
    return total;
  };
  std::vector<int> beta;
  const int len = static_cast<int>(lambda.size());
  for (int i = 0; i < len; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + len - 1 - i);
  return rec(beta, 0);
}

Integer wn_irr_char(const Irrep& lambda, const SignedCycleType& c) {
  if (lambda.size() != c.size()) throw UsageError("character and class of different sizes");
  const int a = std::accumulate(lambda.plus.begin(), lambda.plus.end(), 0);
  Integer total = 0;
  for_each_split(c, a, [&](const SignedCycleType& c1, const SignedCycleType& c2, const Integer& weight) {
    Integer v = weight * sn_irr_char(lambda.plus, merged_lengths(c1)) * sn_irr_char(lambda.minus, merged_lengths(c2));
    if (c2.neg.size() % 2) v = -v;
    total += v;
  });
  return total;
}

namespace {

CharacterTable compute_table(GroupKind g, int n) {
  CharacterTable t{g, n, irreducibles(g, n), conjugacy_classes(g, n), {}, group_order(g, n), {}};
  for (const auto& c : t.classes) t.class_sizes.push_back(class_size(g, c));
  for (const auto& irr : t.irreps) {
    std::vector<Integer> row;
    for (const auto& c : t.classes)
      row.push_back(g == GroupKind::S ? sn_irr_char(irr.plus, c.pos) : wn_irr_char(irr, c));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::filesystem::path cache_path(GroupKind g, int n) {
  const char* dir = std::getenv("ARR_STAB_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("chartable_" + to_string(g) + std::to_string(n) + ".json");
}

bool load_table(const std::filesystem::path& path, CharacterTable& t) {
  std::ifstream in(path);
  if (!in) return false;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("group").get<std::string>() != to_string(t.group) || j.at("n").get<int>() != t.n) return false;
    const auto& classes = j.at("classes");
    const auto& irreps = j.at("irreps");
    const auto& values = j.at("values");
    if (classes.size() != t.classes.size() || irreps.size() != t.irreps.size() || values.size() != t.irreps.size())
      return false;
    for (std::size_t i = 0; i < t.classes.size(); ++i)
      if (classes[i].get<std::string>() != class_key(t.group, t.classes[i])) return false;
    for (std::size_t i = 0; i < t.irreps.size(); ++i)
      if (irreps[i].get<std::string>() != t.irreps[i].name(t.group)) return false;
    std::vector<std::vector<Integer>> parsed;
    for (const auto& row : values) {
      if (row.size() != t.classes.size()) return false;
      std::vector<Integer> r;
      for (const auto& v : row) r.emplace_back(v.get<std::string>());
      parsed.push_back(std::move(r));
    }
    t.values = std::move(parsed);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_table(const std::filesystem::path& path, const CharacterTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  nlohmann::ordered_json j;
  j["group"] = to_string(t.group);
  j["n"] = t.n;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : t.classes) classes.push_back(class_key(t.group, c));
  auto irreps = nlohmann::ordered_json::array();
  for (const auto& i : t.irreps) irreps.push_back(i.name(t.group));
  auto values = nlohmann::ordered_json::array();
  for (const auto& row : t.values) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    values.push_back(std::move(r));
  }
  j["classes"] = std::move(classes);
  j["irreps"] = std::move(irreps);
  j["values"] = std::move(values);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

nlohmann::ordered_json CharacterTable::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = to_string(group);
  j["n"] = n;
  auto cls = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    nlohmann::ordered_json c;
    c["key"] = class_key(group, classes[i]);
    c["size"] = class_sizes[i].get_str();
    cls.push_back(std::move(c));
  }
  j["order"] = order.get_str();
  j["classes"] = std::move(cls);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    nlohmann::ordered_json r;
    r["irrep"] = irreps[i].name(group);
    auto vals = nlohmann::ordered_json::array();
    for (const auto& v : values[i]) vals.push_back(v.fits_slong_p() ? nlohmann::ordered_json(v.get_si()) : nlohmann::ordered_json(v.get_str()));
    r["values"] = std::move(vals);
    rows.push_back(std::move(r));
  }
  j["characters"] = std::move(rows);
  return j;
}

const CharacterTable& character_table(GroupKind g, int n) {
  static std::mutex mutex;
  static std::map<std::pair<GroupKind, int>, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{g, n}];
  if (!slot) {
    const auto path = cache_path(g, n);
    CharacterTable t{g, n, irreducibles(g, n), conjugacy_classes(g, n), {}, group_order(g, n), {}};
    for (const auto& c : t.classes) t.class_sizes.push_back(class_size(g, c));
    if (path.empty() || !load_table(path, t)) {
      t = compute_table(g, n);
      if (!path.empty()) store_table(path, t);
    }
    slot = std::make_unique<CharacterTable>(std::move(t));
  }
  return *slot;
}

ClassFunction irreducible_character(GroupKind g, const Irrep& lambda) {
  const int n = lambda.size();
  const auto& t = character_table(g, n);
  const auto it = std::find(t.irreps.begin(), t.irreps.end(), lambda);
  if (it == t.irreps.end()) throw UsageError("no irreducible " + lambda.name(g));
  ClassFunction f(g, n);
  const auto& row = t.values[static_cast<std::size_t>(it - t.irreps.begin())];
  for (std::size_t i = 0; i < row.size(); ++i) f[i] = Rational(row[i]);
  return f;
}

ClassFunction trivial_character(GroupKind g, int n) {
  ClassFunction f(g, n);
  for (std::size_t i = 0; i < f.class_count(); ++i) f[i] = 1;
  return f;
}

ClassFunction regular_character(GroupKind g, int n) {
  ClassFunction f(g, n);
  SignedCycleType id;
  id.pos.assign(static_cast<std::size_t>(n), 1);
  f.at(id) = Rational(group_order(g, n));
  return f;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group() || f.n() != g.n()) throw UsageError("inner product of class functions on different groups");
  Rational s = 0;
  const auto& cls = f.classes();
  for (std::size_t i = 0; i < f.class_count(); ++i)
    if (f[i] != 0 && g[i] != 0) s += Rational(class_size(f.group(), cls[i])) * f[i] * g[i];
  return s / Rational(group_order(f.group(), f.n()));
}

ClassFunction induce_from_parabolic(int k, const ClassFunction& inner, int n) {
  if (k != inner.n()) throw UsageError("inner character lives on the wrong group");
  if (k > n) throw RangeError("cannot induce from a parabolic of size " + std::to_string(k) + " to " + std::to_string(n));
  ClassFunction out(inner.group(), n);
  const auto& cls = out.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    Rational v = 0;
    for_each_split(cls[i], k, [&](const SignedCycleType& c1, const SignedCycleType&, const Integer& weight) {
      v += Rational(weight) * inner.at(c1);
    });
    out[i] = v;
  }
  return out;
}

ClassFunction induce_from_subgroup(GroupKind g, int n, const std::vector<SignedPermutation>& subgroup,
                                   const std::vector<Rational>& psi) {
  if (subgroup.size() != psi.size()) throw UsageError("one value per subgroup element required");
  ClassFunction sums(g, n);
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    if (g == GroupKind::S && !subgroup[i].is_unsigned()) throw UsageError("signed element in a subgroup of S_n");
    sums.at(cycle_type(subgroup[i])) += psi[i];
  }
  ClassFunction out(g, n);
  const auto& cls = out.classes();
  const Rational h(static_cast<unsigned long>(subgroup.size()));
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (sums[i] != 0) out[i] = Rational(centralizer_order(g, cls[i])) * sums[i] / h;
  return out;
}

Decomposition decompose(const ClassFunction& f) {
  const auto& t = character_table(f.group(), f.n());
  Decomposition out;
  for (const auto& irr : t.irreps) {
    const Rational m = inner_product(f, irreducible_character(f.group(), irr));
    if (m.get_den() != 1 || m < 0)
      throw NotACharacter("not a character: multiplicity " + m.get_str() + " of " + irr.name(f.group()));
    if (m != 0) out.emplace_back(irr, m.get_num());
  }
  if (!(compose_character(f.group(), f.n(), out) == f)) throw NotACharacter("not a character: reconstruction differs");
  return out;
}

ClassFunction compose_character(GroupKind g, int n, const Decomposition& d) {
  ClassFunction f(g, n);
  for (const auto& [irr, m] : d) f += irreducible_character(g, irr) * Rational(m);
  return f;
}

std::string decomposition_string(GroupKind g, const Decomposition& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << " + ";
    if (d[i].second != 1) os << d[i].second << '*';
    os << 'V' << d[i].first.name(g);
  }
  return os.str();
}

nlohmann::ordered_json to_json(GroupKind g, const Decomposition& d) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [irr, m] : d) {
    nlohmann::ordered_json e;
    e["irrep"] = irr.name(g);
    e["multiplicity"] = m.fits_slong_p() ? nlohmann::ordered_json(m.get_si()) : nlohmann::ordered_json(m.get_str());
    arr.push_back(std::move(e));
  }
  return arr;
}

Irrep pad_name(GroupKind g, const Irrep& stable, int n) {
  if (g == GroupKind::S && !stable.minus.empty()) throw UsageError("S_n names have no negative part");
  const int first = n - stable.size();
  const int need = stable.plus.empty() ? 0 : stable.plus.front();
  if (first < need)
    throw RangeError("cannot pad " + stable.name(g) + " to n=" + std::to_string(n) + ": need n >= " +
                     std::to_string(stable.size() + need));
  Irrep out = stable;
  if (first > 0) out.plus.insert(out.plus.begin(), first);
  return out;
}

Irrep stable_name(const Irrep& padded) {
  Irrep out = padded;
  if (!out.plus.empty()) out.plus.erase(out.plus.begin());
  return out;
}

ClassFunction restrict_to_symmetric(const ClassFunction& f) {
  if (f.group() != GroupKind::W) return f;
  ClassFunction out(GroupKind::S, f.n());
  const auto& cls = out.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) out[i] = f.at(cls[i]);
  return out;
}

Rational DClassFunction::inner_product(const DClassFunction& o) const {
  if (n != o.n || representatives != o.representatives) throw UsageError("type D class functions on different groups");
  Rational s = 0;
  Integer order = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += Rational(class_sizes[i]) * values[i] * o.values[i];
    order += class_sizes[i];
  }
  return s / Rational(order);
}

DClassFunction restrict_to_type_d(const ClassFunction& f) {
  if (f.group() != GroupKind::W) throw UsageError("type D restriction needs a W_n class function");
  if (f.n() > 4) throw RangeError("type D restriction is only computed for n <= 4");
  const int n = f.n();
  std::vector<SignedPermutation> even;
  for (auto& w : all_elements(n, true)) {
    int prod = 1;
    for (int e : w.eps()) prod *= e;
    if (prod == 1) even.push_back(std::move(w));
  }
  std::vector<SignedPermutation> inverses;
  for (const auto& h : even) inverses.push_back(invert(h));
  std::set<SignedPermutation> assigned;
  DClassFunction out;
  out.n = n;
  for (const auto& w : even) {
    if (assigned.count(w)) continue;
    std::set<SignedPermutation> cls;
    for (std::size_t i = 0; i < even.size(); ++i) cls.insert(compose(even[i], compose(w, inverses[i])));
    assigned.insert(cls.begin(), cls.end());
    out.representatives.push_back(w);
    out.class_sizes.emplace_back(static_cast<unsigned long>(cls.size()));
    out.values.push_back(f.at(cycle_type(w)));
  }
  return out;
}

}  // namespace arrstab
