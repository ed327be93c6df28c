#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "minimax/affine.hpp"
#include "minimax/heisenberg.hpp"
#include "minimax/lattice_count.hpp"
#include "minimax/parallel.hpp"
#include "minimax/serialize.hpp"
#include "minimax/verify.hpp"

namespace minimax::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string type;
  int rank = 0;
  std::string klass = "all";
  std::string format = "text";
  std::string out_path;
  std::string suite = "all";
  std::string quantity = "minimax";
  std::string generators;
  bool force = false;
};

RootSystem build_system(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  int rank = o.rank;
  int embedded = 0;
  CartanType t = parse_cartan_type(o.type, &embedded);
  if (embedded) {
    if (rank && rank != embedded) throw UsageError("--type " + o.type + " conflicts with --rank " + std::to_string(rank));
    rank = embedded;
  }
  if (!rank) throw UsageError("--rank is required");
  return RootSystem::build(t, rank);
}

/// Conjunction of class names separated by commas; "non_abelian" negates "abelian".
struct ClassQuery {
  IdealFilter base = IdealFilter::All;
  std::vector<IdealFilter> also;
  bool non_abelian = false;

  bool accepts(const Ideal& ideal) const {
    for (auto f : also)
      if (!passes(ideal, f)) return false;
    return !non_abelian || !is_abelian(ideal);
  }
};

ClassQuery parse_class(const std::string& text) {
  ClassQuery query;
  bool have_base = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "non_abelian" || item == "nonabelian") {
      query.non_abelian = true;
      continue;
    }
    IdealFilter f;
    try {
      f = parse_ideal_filter(item);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) + ", non_abelian");
    }
    if (!have_base) {
      query.base = f;
      have_base = true;
    } else {
      query.also.push_back(f);
    }
  }
  return query;
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json" && f != "csv") throw UsageError("--format must be text, json or csv");
}

std::string join_generators(const json& rec) {
  std::string s;
  for (const auto& g : rec["generators"]) {
    if (!s.empty()) s += ";";
    s += g.dump();
  }
  return s.empty() ? "-" : s;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto rs = build_system(o);
  auto query = parse_class(o.klass);
  auto total = count_AD(rs).value;
  if (!o.force && (total > kMaxRecords || total * rs.num_positive() > kMaxWork))
    throw UsageError(rs.label() + " has " + std::to_string(total) + " ideals to scan; rerun with --force");
  std::vector<Ideal> ideals;
  for_each_ideal(rs, query.base, [&](const Ideal& i) {
    if (query.accepts(i)) ideals.push_back(i);
    return true;
  });
  auto records = parallel_map<json>(ideals.size(), [&](std::size_t i) { return ideal_record(ideals[i]); });
  if (o.format == "json") {
    json doc = {{"schema", kSchemaVersion},
                {"type", rs.label()},
                {"rank", rs.rank()},
                {"class", o.klass},
                {"count", records.size()},
                {"ideals", records}};
    out << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "generators,size,strictly_positive,abelian,minimax,heisenberg_contained,rootlet,wmin_length,lattice_image\n";
    for (const auto& r : records) {
      const auto& f = r["flags"];
      out << csv_quote(join_generators(r)) << ',' << r["size"] << ',' << f["strictly_positive"] << ',' << f["abelian"]
          << ',' << f["minimax"] << ',' << f["heisenberg_contained"] << ','
          << csv_quote(r["rootlet"]["text"].get<std::string>()) << ',' << r["wmin_length"] << ','
          << csv_quote(r["lattice_image"].dump()) << "\n";
    }
  } else {
    out << "# " << rs.label() << " class=" << o.klass << " count=" << records.size() << "\n";
    for (const auto& r : records) {
      const auto& f = r["flags"];
      std::string flags;
      auto flag = [&](const char* key, const char* tag) {
        if (f[key].get<bool>()) flags += (flags.empty() ? "" : ",") + std::string(tag);
      };
      flag("strictly_positive", "positive");
      flag("abelian", "abelian");
      flag("minimax", "minimax");
      flag("heisenberg_contained", "heisenberg");
      out << join_generators(r) << "  #I=" << r["size"] << "  [" << (flags.empty() ? "-" : flags)
          << "]  w(a0)=" << r["rootlet"]["text"].get<std::string>() << "  l(w_min)=" << r["wmin_length"]
          << "  y=" << r["lattice_image"].dump() << "\n";
    }
  }
  return kOk;
}

std::vector<IntVec> parse_generators(const std::string& text, int rank) {
  std::vector<IntVec> roots;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    IntVec v{};
    std::stringstream is(item);
    std::string num;
    int i = 0;
    while (std::getline(is, num, ',')) {
      if (i >= rank) throw UsageError("generator '" + item + "' has more than " + std::to_string(rank) + " entries");
      try {
        v[i++] = std::stoi(num);
      } catch (const std::exception&) {
        throw UsageError("malformed generator '" + item + "'");
      }
    }
    if (i != rank) throw UsageError("generator '" + item + "' needs " + std::to_string(rank) + " entries");
    roots.push_back(v);
  }
  return roots;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto rs = build_system(o);
  Ideal ideal = ideal_of(rs, parse_generators(o.generators, rs.rank()));
  json rec = ideal_record(ideal);
  rec["w_min"] = element_to_json(rs, w_min(ideal));
  if (is_strictly_positive(ideal)) rec["w_max"] = element_to_json(rs, w_max(ideal));
  if (o.format == "json") {
    out << rec.dump(2) << "\n";
    return kOk;
  }
  if (o.format == "csv") throw UsageError("classify supports text and json output");
  out << rs.label() << " ideal generated by " << join_generators(rec) << "\n";
  out << "  size: " << rec["size"] << "\n";
  for (const auto& [k, v] : rec["flags"].items()) out << "  " << k << ": " << v << "\n";
  out << "  rootlet: " << rec["rootlet"]["text"].get<std::string>() << "\n";
  out << "  w_min word: " << rec["w_min"]["word"].dump() << " (length " << rec["w_min"]["length"] << ")\n";
  if (rec.contains("w_max"))
    out << "  w_max word: " << rec["w_max"]["word"].dump() << " (length " << rec["w_max"]["length"] << ")\n";
  out << "  lattice image: " << rec["lattice_image"].dump() << "\n";
  return kOk;
}

void print_reports(const std::vector<CountReport>& reports, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json a = json::array();
    for (const auto& r : reports) a.push_back(report_to_json(r));
    out << a.dump(2) << "\n";
  } else if (format == "csv") {
    out << csv_header() << "\n";
    for (const auto& r : reports) out << to_csv_row(r) << "\n";
  } else {
    for (const auto& r : reports)
      out << r.type_label << " " << r.quantity << " = " << r.value << "  (" << to_string(r.method)
          << (r.congruence_applied ? ", congruence filter" : "") << ")\n";
  }
}

int cmd_count(const Options& o, std::ostream& out) {
  auto rs = build_system(o);
  std::vector<CountReport> reports;
  if (o.quantity == "AD")
    reports.push_back(count_AD(rs));
  else if (o.quantity == "AD0")
    reports.push_back(count_AD0(rs));
  else if (o.quantity == "minimax")
    reports = count_minimax_reports(rs);
  else if (o.quantity == "heisenberg_nontrivial")
    reports.push_back({rs.label(), rs.rank(), "heisenberg_nontrivial", heisenberg_nontrivial_count(rs),
                       CountMethod::ClosedForm, false});
  else
    throw UsageError("unknown quantity '" + o.quantity + "': expected AD, AD0, minimax, heisenberg_nontrivial");
  print_reports(reports, o.format, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = suite_names();
  else
    suites.push_back(o.suite);
  bool ok = true;
  json doc = json::array();
  for (const auto& name : suites) {
    SuiteResult r;
    try {
      r = run_suite(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ok = ok && r.passed();
    if (o.format == "json") {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back(
            {{"what", c.what}, {"expected", c.expected}, {"computed", c.computed}, {"method", c.method}, {"ok", c.ok}});
      doc.push_back({{"suite", name}, {"passed", r.passed()}, {"checks", checks}});
    } else if (o.format == "csv") {
      if (&name == &suites.front()) out << "suite,what,expected,computed,method,ok\n";
      for (const auto& c : r.checks)
        out << name << ',' << csv_quote(c.what) << ',' << csv_quote(c.expected) << ',' << csv_quote(c.computed) << ','
            << csv_quote(c.method) << ',' << (c.ok ? "true" : "false") << "\n";
    } else {
      int failed = 0;
      for (const auto& c : r.checks)
        if (!c.ok) {
          ++failed;
          out << "  MISMATCH " << c.what << ": expected " << c.expected << ", computed " << c.computed << " ["
              << c.method << "]\n";
        }
      out << (r.passed() ? "PASS " : "FAIL ") << name << " (" << r.checks.size() - failed << "/" << r.checks.size()
          << " checks)\n";
    }
  }
  if (o.format == "json") out << doc.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_tables(const Options& o, std::ostream& out) {
  std::vector<CountReport> reports;
  auto add = [&](CartanType t, int n) {
    auto rs = RootSystem::build(t, n);
    reports.push_back(count_minimax(rs));
  };
  for (int n = 1; n <= 8; ++n) add(CartanType::A, n);
  for (int n = 2; n <= 8; ++n) add(CartanType::B, n);
  for (int n = 2; n <= 8; ++n) add(CartanType::C, n);
  for (int n = 4; n <= 8; ++n) add(CartanType::D, n);
  for (int n = 6; n <= 8; ++n) add(CartanType::E, n);
  add(CartanType::F, 4);
  add(CartanType::G, 2);
  auto f4 = RootSystem::build(CartanType::F, 4);
  auto rows = nonabelian_minimax_rows(f4);
  if (o.format == "json") {
    json counts = json::array();
    for (const auto& r : reports) counts.push_back(report_to_json(r));
    json table = json::array();
    for (const auto& r : rows)
      table.push_back({{"generators", r.generators},
                       {"size", r.size},
                       {"square_size", r.square_size},
                       {"rootlet", r.rootlet},
                       {"y", r.y}});
    out << json{{"minimax_counts", counts}, {"F4_nonabelian_minimax", table}}.dump(2) << "\n";
    return kOk;
  }
  if (o.format == "csv") {
    print_reports(reports, "csv", out);
    return kOk;
  }
  out << "minimax counts\n";
  for (const auto& r : reports) out << "  " << r.type_label << "  " << r.value << "\n";
  out << "\nF4 non-Abelian minimax ideals\n";
  out << "  generators | #I | #I^2 | w(alpha_0) | y\n";
  for (const auto& r : rows)
    out << "  " << r.generators << " | " << r.size << " | " << r.square_size << " | " << r.rootlet << " | " << r.y
        << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, classify and count ideals of positive root systems", "minimax"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Root system type: A, B, C, D, E, F, G or a label such as E6");
    sub->add_option("--rank", o.rank, "Rank");
    sub->add_option("--format", o.format, "text, json or csv");
    sub->add_option("--out", o.out_path, "Write output to this file");
  };
  auto* en = app.add_subcommand("enumerate", "List ideals with classification data");
  common(en);
  en->add_option("--class", o.klass,
                 "all, strictly_positive, abelian, non_abelian, minimax, heisenberg_contained (comma separated)");
  en->add_flag("--force", o.force, "Allow very large enumerations");
  auto* cl = app.add_subcommand("classify", "Classify one ideal");
  common(cl);
  cl->add_option("--gen", o.generators, "Generators as \"1,1,0;0,1,1\"")->required();
  auto* co = app.add_subcommand("count", "Count ideals or minimax elements");
  common(co);
  co->add_option("--quantity", o.quantity, "AD, AD0, minimax or heisenberg_nontrivial");
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("--suite", o.suite, "motzkin, animals, soD, exceptional, f4table, formulas, bijections, heisenberg, all");
  ve->add_option("--format", o.format, "text, json or csv");
  ve->add_option("--out", o.out_path, "Write output to this file");
  auto* ta = app.add_subcommand("tables", "Print the count tables and the F4 table");
  ta->add_option("--format", o.format, "text, json or csv");
  ta->add_option("--out", o.out_path, "Write output to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  std::ostringstream buffer;
  try {
    check_format(o.format);
    if (!o.out_path.empty()) sink = &buffer;
    int code = kOk;
    if (en->parsed())
      code = cmd_enumerate(o, *sink);
    else if (cl->parsed())
      code = cmd_classify(o, *sink);
    else if (co->parsed())
      code = cmd_count(o, *sink);
    else if (ve->parsed())
      code = cmd_verify(o, *sink);
    else
      code = cmd_tables(o, *sink);
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) {
        err << "error: cannot write " << o.out_path << "\n";
        return kUsage;
      }
      file << buffer.str();
    }
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace minimax::cli
