// arrstab: layer posets, E2 pages and stability scans for root-system arrangements.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "arrstab/characters.hpp"
#include "arrstab/elliptic.hpp"
#include "arrstab/labelled_partition.hpp"
#include "arrstab/lattice_oracle.hpp"
#include "arrstab/layer_poset.hpp"
#include "arrstab/report.hpp"
#include "arrstab/spectral.hpp"
#include "arrstab/stability.hpp"

using namespace arrstab;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kMaxVerifyN = 5;

struct Options {
  std::string family = "A";
  std::string space = "linear";
  std::string group;
  std::string n = "2";
  int i = 1;
  int p = 0;
  int q = 0;
  std::optional<int> max_rank;
  std::string format = "json";
  std::string out;
  std::string matrix;
};

struct Resolved {
  Family family;
  GroundSpace space;
  int n_lo = 0, n_hi = 0;
};

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

Resolved resolve(const Options& o, bool range_allowed) {
  Resolved r{parse_family(o.family), GroundSpace{parse_space(o.space)}};
  const auto dots = o.n.find("..");
  if (dots == std::string::npos) {
    r.n_lo = r.n_hi = parse_int(o.n, "n");
  } else {
    if (!range_allowed) throw UsageError("--n takes a single value here");
    r.n_lo = parse_int(o.n.substr(0, dots), "n");
    r.n_hi = parse_int(o.n.substr(dots + 2), "n");
  }
  if (r.n_lo < 1 || r.n_hi < r.n_lo) throw UsageError("--n must be positive (a..b with a <= b)");
  if (r.family == Family::D && r.n_lo < 2) throw UsageError("type D needs n >= 2");
  if (o.max_rank && *o.max_rank < 0) throw UsageError("--max-rank must be nonnegative");
  return r;
}

ojson base_config(const std::string& command, const Options& o, const Resolved& r) {
  ojson c;
  c["command"] = command;
  c["family"] = to_string(r.family);
  c["space"] = to_string(r.space.kind);
  if (r.n_lo == r.n_hi)
    c["n"] = r.n_lo;
  else
    c["n"] = {r.n_lo, r.n_hi};
  c["format"] = o.format;
  return c;
}

void require_format(const Options& o, bool dot_allowed) {
  if (o.format == "dot" && !dot_allowed) throw UsageError("--format dot is only available for poset");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

int cmd_poset(const Options& o) {
  require_format(o, true);
  const auto r = resolve(o, false);
  const auto poset = LayerPoset::build(r.family, r.space, r.n_lo, o.max_rank);
  if (o.format == "dot") {
    emit(o, poset.to_dot());
  } else if (o.format == "table") {
    emit(o, poset.to_table());
  } else {
    auto cfg = base_config("poset", o, r);
    cfg["max_rank"] = o.max_rank ? ojson(*o.max_rank) : ojson(nullptr);
    emit(o, dump(envelope(r.family, r.space, cfg, poset.to_json())));
  }
  return 0;
}

int cmd_verify(const Options& o) {
  require_format(o, false);
  const auto r = resolve(o, false);
  if (r.n_lo > kMaxVerifyN) throw RangeError("verify supports n <= " + std::to_string(kMaxVerifyN));
  const auto rep = verify_layer_isomorphism(r.family, r.space, r.n_lo, o.max_rank);
  if (o.format == "table") {
    emit(o, to_table(rep));
  } else {
    auto cfg = base_config("verify", o, r);
    cfg["max_rank"] = o.max_rank ? ojson(*o.max_rank) : ojson(nullptr);
    emit(o, dump(envelope(r.family, r.space, cfg, rep.to_json())));
  }
  return rep.passed ? 0 : 1;
}

int cmd_h(const Options& o) {
  require_format(o, false);
  const auto r = resolve(o, false);
  const auto h = cohomology(o.i, r.n_lo, r.family, r.space);
  if (o.format == "table") {
    emit(o, to_table(h));
  } else {
    auto cfg = base_config("h", o, r);
    cfg["i"] = o.i;
    auto res = h.to_json();
    if (r.space.kind == SpaceKind::Elliptic && r.family == Family::D && o.i == 1 && r.n_lo >= 4)
      res["discrepancy"] = "computed dimension " + h.dim.get_str() + " differs from the tabulated 2n = " +
                           std::to_string(2 * r.n_lo);
    emit(o, dump(envelope(r.family, r.space, cfg, res)));
  }
  return 0;
}

int cmd_e2(const Options& o) {
  require_format(o, false);
  const auto r = resolve(o, false);
  if (o.p < 0 || o.q < 0) throw UsageError("--p and --q must be nonnegative");
  const auto cell = e2_cell(o.p, o.q, r.n_lo, r.family, r.space);
  if (o.format == "table") {
    emit(o, to_table(cell));
  } else {
    auto cfg = base_config("e2", o, r);
    cfg["p"] = o.p;
    cfg["q"] = o.q;
    emit(o, dump(envelope(r.family, r.space, cfg, cell.to_json())));
  }
  return 0;
}

int cmd_scan(const Options& o) {
  require_format(o, false);
  const auto r = resolve(o, true);
  const auto rep = stability_scan(o.i, r.family, r.space, r.n_lo, r.n_hi);
  if (o.format == "table") {
    emit(o, to_table(rep));
  } else {
    auto cfg = base_config("scan", o, r);
    cfg["i"] = o.i;
    emit(o, dump(envelope(r.family, r.space, cfg, rep.to_json())));
  }
  return 0;
}

int cmd_char_table(const Options& o) {
  require_format(o, false);
  const GroupKind g = o.group.empty() ? group_of(parse_family(o.family)) : parse_group(o.group);
  const int n = parse_int(o.n, "n");
  if (n < 1) throw UsageError("--n must be positive");
  const auto& t = character_table(g, n);
  if (o.format == "table") {
    emit(o, to_table(t));
  } else {
    ojson cfg;
    cfg["command"] = "char-table";
    cfg["group"] = to_string(g);
    cfg["n"] = n;
    cfg["format"] = o.format;
    emit(o, dump(envelope(std::nullopt, std::nullopt, cfg, t.to_json())));
  }
  return 0;
}

int cmd_snf(const Options& o) {
  require_format(o, false);
  std::string text = o.matrix;
  if (text.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (text.front() != '[') {
    std::ifstream f(text);
    if (!f) throw UsageError("cannot read " + text);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("matrix is not valid JSON: ") + e.what());
  }
  const auto m = int_matrix_from_json(parsed);
  const auto snf = smith_normal_form(m);
  if (!certify(m, snf)) throw std::logic_error("Smith normal form certificate failed");
  if (o.format == "table") {
    emit(o, to_table(snf));
  } else {
    ojson cfg;
    cfg["command"] = "snf";
    cfg["format"] = o.format;
    ojson res;
    res["matrix"] = to_json(m);
    res["rank"] = snf.rank;
    auto inv = ojson::array();
    for (const auto& d : snf.invariant_factors) inv.push_back(to_json(d));
    res["invariant_factors"] = std::move(inv);
    res["D"] = to_json(snf.D);
    res["U"] = to_json(snf.U);
    res["V"] = to_json(snf.V);
    res["certified"] = true;
    emit(o, dump(envelope(std::nullopt, std::nullopt, cfg, res)));
  }
  return 0;
}

void add_case_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "root system type: A, B, C or D")->capture_default_str();
  sub->add_option("--space", o.space, "linear, toric or elliptic")->capture_default_str();
}

void add_output_flags(CLI::App* sub, Options& o, bool dot) {
  sub->add_option("--format", o.format, dot ? "json, dot or table" : "json or table")
      ->check(dot ? CLI::IsMember({"json", "dot", "table"}) : CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "write output to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layer posets, E2 pages and representation stability for root-system arrangements"};
  app.require_subcommand(1);
  Options o;

  auto* poset = app.add_subcommand("poset", "dump the poset of layers");
  add_case_flags(poset, o);
  poset->add_option("--n", o.n, "number of coordinates")->required();
  poset->add_option("--max-rank", o.max_rank, "only layers up to this rank");
  add_output_flags(poset, o, true);

  auto* verify = app.add_subcommand("verify", "check the labelled-partition poset against the lattice computation");
  add_case_flags(verify, o);
  verify->add_option("--n", o.n, "number of coordinates")->required();
  verify->add_option("--max-rank", o.max_rank, "only layers up to this rank");
  add_output_flags(verify, o, false);

  auto* h = app.add_subcommand("h", "cohomology of the complement in one degree");
  add_case_flags(h, o);
  h->add_option("--n", o.n, "number of coordinates")->required();
  h->add_option("--i", o.i, "cohomological degree")->capture_default_str();
  add_output_flags(h, o, false);

  auto* e2 = app.add_subcommand("e2", "one cell of the E2 page with its induced pieces");
  add_case_flags(e2, o);
  e2->add_option("--n", o.n, "number of coordinates")->required();
  e2->add_option("--p", o.p, "ambient degree")->capture_default_str();
  e2->add_option("--q", o.q, "Orlik-Solomon degree")->capture_default_str();
  add_output_flags(e2, o, false);

  auto* scan = app.add_subcommand("scan", "representation-stability scan over a range of n");
  add_case_flags(scan, o);
  scan->add_option("--n", o.n, "window a..b")->required();
  scan->add_option("--i", o.i, "cohomological degree")->capture_default_str();
  add_output_flags(scan, o, false);

  auto* table = app.add_subcommand("char-table", "character table of S_n or W_n");
  table->add_option("--group", o.group, "S or W");
  table->add_option("--family", o.family, "pick the group from a root system type instead");
  table->add_option("--n", o.n, "rank of the group")->required();
  add_output_flags(table, o, false);

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", o.matrix, "JSON array of rows, or a file holding one (stdin if omitted)");
  add_output_flags(snf, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poset) return cmd_poset(o);
    if (*verify) return cmd_verify(o);
    if (*h) return cmd_h(o);
    if (*e2) return cmd_e2(o);
    if (*scan) return cmd_scan(o);
    if (*table) return cmd_char_table(o);
    if (*snf) return cmd_snf(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
