// grasscalc: exact Schubert intersection numbers on G(k,N), computed by
// fermion integral, by closed form and by a combinatorial oracle, with
// cross-validation between the three.
//
// Exit codes: 0 ok, 1 usage error, 2 precondition violation,
// 3 verification failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "grasscalc/closed_forms.hpp"
#include "grasscalc/grassmann.hpp"
#include "grasscalc/oracle.hpp"
#include "grasscalc/partition.hpp"
#include "grasscalc/schubert.hpp"
#include "grasscalc/verify.hpp"
#include "json.hpp"

namespace {

using namespace grasscalc;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("GRASSCALC_LOG");
    if (env == nullptr) return LogLevel::error;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::error;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::debug) std::cerr << "[debug] " << msg << "\n";
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out)
    throw std::invalid_argument("cannot open output file " + output_path);
  out << text;
  log_info("wrote " + output_path);
}

struct Range {
  int lo = 0;
  int hi = -1;  // empty when hi < lo
};

// "4" or "4..8"
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text +
                                "' (expected INT or LO..HI)");
  }
}

json partition_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

std::string csv_quote(const std::string& field) { return '"' + field + '"'; }

// ---------------------------------------------------------------------
// integrate
// ---------------------------------------------------------------------

enum class Method { berezin, closed, oracle, all };

// The closed forms cover exactly the products of sigma_1 and sigma_{1,1}
// powers of full weight. Returns the reason when none applies.
std::optional<Integer> closed_form_value(int k, int N,
                                         const std::vector<Partition>& classes,
                                         std::string& reason) {
  int ones = 0, columns2 = 0, weight = 0;
  for (const Partition& a : classes) {
    weight += a.weight();
    if (a == Partition{1})
      ++ones;
    else if (a == Partition{1, 1})
      ++columns2;
    else if (!a.empty()) {
      reason = "no closed form covers class " + a.to_string();
      return std::nullopt;
    }
  }
  if (weight != k * (N - k)) {
    reason = "total weight " + std::to_string(weight) + " != k(N-k) = " +
             std::to_string(k * (N - k)) + "; no closed form applies";
    return std::nullopt;
  }
  if (columns2 == 0) return intersect_sigma1_power(k, N);
  if (columns2 == 1) return intersect_sigma1_sigma11(k, N);
  if (columns2 == 2) return intersect_sigma1_sigma11_sq(k, N);
  if (k == 2) return g2n_family(N, columns2);
  reason = "no closed form for sigma_{1,1}^" + std::to_string(columns2) +
           " with k = " + std::to_string(k);
  return std::nullopt;
}

struct IntegrateSpec {
  int k = 0;
  int N = 0;
  std::string classes_text;
  Method method = Method::all;
  std::string format = "text";
  std::string output;
};

int cmd_integrate(const IntegrateSpec& spec) {
  const std::vector<Partition> classes = parse_class_list(spec.classes_text);
  const GrassmannContext ctx(spec.k, spec.N);
  for (const Partition& a : classes)
    if (!a.fits_box(ctx.k(), ctx.num_sheets()))
      throw std::domain_error("partition " + a.to_string() + " outside the " +
                              std::to_string(ctx.k()) + "x" +
                              std::to_string(ctx.num_sheets()) + " box");

  std::optional<Rational> berezin_value;
  std::optional<Integer> closed_value;
  std::optional<Integer> oracle_value;
  std::string closed_reason;

  const bool want_all = spec.method == Method::all;
  if (want_all || spec.method == Method::berezin) {
    log_debug("running fermion integral");
    berezin_value = integrate_product(ctx, classes);
  }
  if (want_all || spec.method == Method::closed) {
    closed_value = closed_form_value(spec.k, spec.N, classes, closed_reason);
    if (!closed_value && spec.method == Method::closed)
      throw std::domain_error(closed_reason);
  }
  if (want_all || spec.method == Method::oracle) {
    log_debug("running combinatorial oracle");
    oracle_value = oracle::intersection(spec.k, spec.N, classes);
  }

  std::vector<Rational> values;
  if (berezin_value) values.push_back(*berezin_value);
  if (closed_value) values.emplace_back(*closed_value);
  if (oracle_value) values.emplace_back(*oracle_value);
  bool agree = true;
  for (const Rational& v : values) agree = agree && v == values.front();

  std::ostringstream out;
  if (spec.format == "json") {
    json j;
    j["k"] = spec.k;
    j["N"] = spec.N;
    j["classes"] = json::array();
    for (const Partition& a : classes) j["classes"].push_back(partition_json(a));
    j["results"] = json::object();
    // numbers as decimal strings so downstream consumers never overflow
    j["results"]["berezin"] =
        berezin_value ? json(to_string(*berezin_value)) : json(nullptr);
    j["results"]["closed"] =
        closed_value ? json(to_string(*closed_value)) : json(nullptr);
    j["results"]["oracle"] =
        oracle_value ? json(to_string(*oracle_value)) : json(nullptr);
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else if (spec.format == "csv") {
    out << "k,N,classes,berezin,closed,oracle,agree\n";
    out << spec.k << ',' << spec.N << ','
        << csv_quote(render_class_list(classes)) << ','
        << (berezin_value ? to_string(*berezin_value) : "") << ','
        << (closed_value ? to_string(*closed_value) : "") << ','
        << (oracle_value ? to_string(*oracle_value) : "") << ','
        << (agree ? "true" : "false") << "\n";
  } else {
    out << "G(" << spec.k << "," << spec.N << ") classes "
        << render_class_list(classes) << "\n";
    if (berezin_value) out << "  berezin: " << to_string(*berezin_value) << "\n";
    if (closed_value)
      out << "  closed:  " << to_string(*closed_value) << "\n";
    else if (want_all)
      out << "  closed:  n/a (" << closed_reason << ")\n";
    if (oracle_value) out << "  oracle:  " << to_string(*oracle_value) << "\n";
    if (values.size() > 1) out << "  agree:   " << (agree ? "yes" : "NO") << "\n";
  }
  emit(out.str(), spec.output);
  return agree ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------
// table
// ---------------------------------------------------------------------

struct TableSpec {
  std::string kind;
  std::string k_range = "2";
  std::string n_range;
  std::string l_range = "0..2";
  int formula = 1;
  std::string format = "text";
  std::string output;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const Table& t, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    for (std::size_t i = 0; i < t.header.size(); ++i)
      out << (i ? "," : "") << t.header[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json obj;
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = row[i];
      arr.push_back(obj);
    }
    out << arr.dump(2) << "\n";
  } else {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i)
      width[i] = t.header[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << cells[i] << std::string(width[i] - cells[i].size(), ' ');
        out << (i + 1 == cells.size() ? "\n" : "  ");
      }
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
  }
  return out.str();
}

// One theorem-family row: closed form vs fermion integral vs oracle.
std::vector<std::string> family_row(int k, int N, int p, int l,
                                    const Integer& closed) {
  const SchubertEngine se{GrassmannContext(k, N)};
  const AlgebraElement x =
      pow(se.taus().tau(1), p) * pow(se.taus().tau(2), l);
  const Rational berezin_value = normalization_constant(k, N) *
                                 Rational(berezin_integral(se.context(), x));
  std::optional<Integer> oracle_value;
  if (l == 0 || k >= 2) {
    std::vector<Partition> classes;
    for (int i = 0; i < p; ++i) classes.push_back(Partition{1});
    for (int i = 0; i < l; ++i) classes.push_back(Partition{1, 1});
    oracle_value = oracle::intersection(k, N, classes);
  }
  const bool agree = berezin_value == Rational(closed) &&
                     (!oracle_value || berezin_value == Rational(*oracle_value));
  return {std::to_string(k),
          std::to_string(N),
          to_string(closed),
          to_string(berezin_value),
          oracle_value ? to_string(*oracle_value) : "n/a",
          agree ? "true" : "false"};
}

int cmd_table(const TableSpec& spec) {
  Table t;
  bool all_agree = true;
  const auto note_row = [&](std::vector<std::string> row) {
    all_agree = all_agree && row.back() == "true";
    t.rows.push_back(std::move(row));
    log_debug("table row " + std::to_string(t.rows.size()));
  };

  if (spec.kind == "theorem1") {
    if (spec.formula < 1 || spec.formula > 3)
      throw std::invalid_argument("--formula must be 1, 2 or 3");
    t.header = {"k", "N", "closed", "berezin", "oracle", "agree"};
    const Range kr = parse_range(spec.k_range);
    const Range nr = parse_range(spec.n_range);
    for (int k = kr.lo; k <= kr.hi; ++k) {
      for (int N = nr.lo; N <= nr.hi; ++N) {
        if (k < 1 || k >= N) continue;
        const int drop = 2 * (spec.formula - 1);
        const int p = k * N - k * k - drop;
        if (p < 0) continue;  // outside the stated hypothesis
        const Integer closed = spec.formula == 1
                                   ? intersect_sigma1_power(k, N)
                               : spec.formula == 2
                                   ? intersect_sigma1_sigma11(k, N)
                                   : intersect_sigma1_sigma11_sq(k, N);
        note_row(family_row(k, N, p, spec.formula - 1, closed));
      }
    }
  } else if (spec.kind == "g2n") {
    t.header = {"N", "l", "closed", "berezin", "oracle", "agree"};
    const Range nr = parse_range(spec.n_range);
    const Range lr = parse_range(spec.l_range);
    for (int N = nr.lo; N <= nr.hi; ++N) {
      for (int l = lr.lo; l <= lr.hi; ++l) {
        if (N < 3 || l < 0 || l > N - 2) continue;
        auto row = family_row(2, N, 2 * N - 4 - 2 * l, l, g2n_family(N, l));
        row.erase(row.begin());  // drop k, insert l after N
        row.insert(row.begin() + 1, std::to_string(l));
        note_row(std::move(row));
      }
    }
  } else if (spec.kind == "qdecomp") {
    t.header = {"k", "N", "q1", "q2", "q3", "sum", "p2", "agree"};
    const Range kr = parse_range(spec.k_range);
    const Range nr = parse_range(spec.n_range);
    for (int k = kr.lo; k <= kr.hi; ++k) {
      for (int N = nr.lo; N <= nr.hi; ++N) {
        if (k < 1 || k >= N || k * N - k * k - 4 < 0) continue;
        const QDecomposition q = q_decomposition(k, N);
        const Integer p2 = p_moment(2, k, N);
        // agree also requires each piece to match its restricted fermion
        // integral, computed from scratch with the engine
        const GrassmannContext ctx(k, N);
        const OmegaTable w(ctx);
        const AlgebraElement t4 = pow(w.trace(), k * N - k * k - 4);
        Integer b1 = 0, b2 = 0, b3 = 0;
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= k; ++j) {
            const AlgebraElement pair = w.at(i, i) * w.at(j, j);
            b1 += berezin_integral(ctx, t4 * (pair * pair));
          }
        for (int m = 1; m <= k; ++m)
          for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
              if (i == j) continue;
              b2 += 2 * berezin_integral(ctx, t4 * w.at(m, m) * w.at(m, m) *
                                                  w.at(i, j) * w.at(j, i));
            }
        for (int a = 1; a <= k; ++a)
          for (int b = 1; b <= k; ++b) {
            if (a == b) continue;
            for (int i = 1; i <= k; ++i)
              for (int j = 1; j <= k; ++j) {
                if (i == j) continue;
                b3 += berezin_integral(ctx, t4 * w.at(a, b) * w.at(b, a) *
                                                w.at(i, j) * w.at(j, i));
              }
          }
        const bool agree = q.sum() == p2 && q.q1 == b1 && q.q2 == b2 &&
                           q.q3 == b3;
        note_row({std::to_string(k), std::to_string(N), to_string(q.q1),
                  to_string(q.q2), to_string(q.q3), to_string(q.sum()),
                  to_string(p2), agree ? "true" : "false"});
      }
    }
  } else {
    throw std::invalid_argument("unknown table kind '" + spec.kind +
                                "' (expected theorem1, g2n or qdecomp)");
  }

  emit(render_table(t, spec.format), spec.output);
  return all_agree ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

struct VerifySpec {
  std::string level = "quick";
  std::string format = "text";
  std::string mutation = "none";
  double budget = -1.0;
  std::string output;
};

int cmd_verify(const VerifySpec& spec) {
  VerifyOptions opts;
  opts.level = spec.level == "full" ? VerifyLevel::full : VerifyLevel::quick;
  if (spec.budget >= 0) opts.budget_seconds = spec.budget;
  opts.mutate_berezin_sign = spec.mutation == "sign-flip";
  if (opts.mutate_berezin_sign)
    log_info("mutation self-test: Berezin sign flipped, failures expected");

  const auto results = run_verification(opts, [](const CheckResult& r) {
    log_debug(std::string(to_string(r.status)) + " " + r.id + " (" +
              std::to_string(r.elapsed_seconds) + "s)");
  });
  const VerifySummary s = summarize(results);

  std::ostringstream out;
  if (spec.format == "json") {
    json j;
    j["level"] = spec.level;
    j["checks"] = json::array();
    for (const CheckResult& r : results) {
      json c;
      c["id"] = r.id;
      c["criterion"] = r.criterion;
      c["status"] = to_string(r.status);
      c["lhs"] = r.lhs;
      c["rhs"] = r.rhs;
      c["elapsed_ms"] = r.elapsed_seconds * 1e3;
      j["checks"].push_back(c);
    }
    j["summary"] = {{"pass", s.passed}, {"fail", s.failed},
                    {"skipped", s.skipped}};
    out << j.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      out << to_string(r.status) << "  " << r.id;
      if (r.status == CheckStatus::fail)
        out << "  got [" << r.lhs << "] expected [" << r.rhs << "]";
      out << "\n";
    }
    out << "summary: " << s.passed << " passed, " << s.failed << " failed, "
        << s.skipped << " skipped\n";
  }
  emit(out.str(), spec.output);
  return s.failed == 0 ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------

struct BenchSpec {
  std::string sizes;
  int ceiling = 20;
  std::string format = "text";
  std::string output;
};

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
  std::vector<std::pair<int, int>> sizes;
  std::istringstream stream(text);
  std::string pair_text;
  while (std::getline(stream, pair_text, ';')) {
    const auto comma = pair_text.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--sizes expects pairs like \"2,6;3,7\"");
    try {
      sizes.emplace_back(std::stoi(pair_text.substr(0, comma)),
                         std::stoi(pair_text.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad size pair '" + pair_text + "'");
    }
  }
  if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
  return sizes;
}

int cmd_bench(const BenchSpec& spec) {
  const std::vector<std::pair<int, int>> sizes = parse_sizes(spec.sizes);

  Table t;
  t.header = {"k", "N", "dim_top", "value", "wall_ms", "peak_terms"};
  for (const auto& [k, N] : sizes) {
    if (k * (N - k) > spec.ceiling)
      throw std::domain_error(
          "size (" + std::to_string(k) + "," + std::to_string(N) +
          ") exceeds the k(N-k) ceiling of " + std::to_string(spec.ceiling) +
          "; raise --ceiling to run it anyway");
    const GrassmannContext ctx(k, N);
    const auto t0 = std::chrono::steady_clock::now();
    const SchubertEngine se{ctx};
    // The canonical workload: the sigma_1 power filling the whole box.
    const AlgebraElement tau1 = se.taus().tau(1);
    AlgebraElement acc = AlgebraElement::unit();
    std::size_t peak = 1;
    for (int i = 0; i < k * (N - k); ++i) {
      acc = acc * tau1;
      peak = std::max(peak, acc.term_count());
    }
    const Rational value = normalization_constant(k, N) *
                           Rational(berezin_integral(ctx, acc));
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    std::ostringstream ms_text;
    ms_text.setf(std::ios::fixed);
    ms_text.precision(3);
    ms_text << ms;
    t.rows.push_back({std::to_string(k), std::to_string(N),
                      std::to_string(ctx.dim_top()), to_string(value),
                      ms_text.str(), std::to_string(peak)});
    log_info("bench G(" + std::to_string(k) + "," + std::to_string(N) +
             ") done in " + ms_text.str() + " ms");
  }
  emit(render_table(t, spec.format == "csv" ? "csv" : "text"), spec.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "grasscalc: exact Schubert intersection numbers on the Grassmannian "
      "G(k,N), cross-validated between a fermionic (Grassmann-algebra) "
      "engine, closed formulas and a combinatorial oracle"};
  app.require_subcommand(1);

  IntegrateSpec ispec;
  auto* integrate = app.add_subcommand(
      "integrate", "integrate a product of Schubert classes over G(k,N)");
  integrate->add_option("--k", ispec.k, "rank k")->required();
  integrate->add_option("--N", ispec.N, "ambient dimension N")->required();
  integrate
      ->add_option("--classes", ispec.classes_text,
                   "semicolon-separated partitions, e.g. \"2,1;1,1\"")
      ->required();
  integrate->add_option("--method", ispec.method, "computation path")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Method>{{"berezin", Method::berezin},
                                        {"closed", Method::closed},
                                        {"oracle", Method::oracle},
                                        {"all", Method::all}}))
      ->default_str("all");
  integrate->add_option("--format", ispec.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_str("text");
  integrate->add_option("--output", ispec.output, "write to file");

  TableSpec tspec;
  auto* table = app.add_subcommand(
      "table", "sweep a formula family and cross-check every row");
  table->add_option("--kind", tspec.kind, "theorem1, g2n or qdecomp")
      ->required();
  table->add_option("--k", tspec.k_range, "k or range LO..HI");
  table->add_option("--N", tspec.n_range, "N or range LO..HI")->required();
  table->add_option("--l", tspec.l_range,
                    "sigma_{1,1} exponent range for g2n (default 0..2)");
  table->add_option("--formula", tspec.formula,
                    "theorem1 display: 1, 2 or 3 (default 1)");
  table->add_option("--format", tspec.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_str("text");
  table->add_option("--output", tspec.output, "write to file");

  VerifySpec vspec;
  auto* verify = app.add_subcommand(
      "verify", "run the cross-validation suite and report per-check status");
  verify->add_option("--level", vspec.level, "quick (dim_top <= 12) or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->default_str("quick");
  verify->add_option("--format", vspec.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");
  verify->add_option("--budget", vspec.budget,
                     "wall-clock budget in seconds; checks beyond it are "
                     "skipped, never failed");
  verify->add_option("--mutation", vspec.mutation,
                     "harness self-test: sign-flip corrupts the Berezin "
                     "integral and must produce failures")
      ->check(CLI::IsMember({"none", "sign-flip"}))
      ->default_str("none");
  verify->add_option("--output", vspec.output, "write to file");

  BenchSpec bspec;
  auto* bench = app.add_subcommand(
      "bench", "time the sigma_1-power integral at the given sizes");
  bench->add_option("--sizes", bspec.sizes, "pairs like \"2,6;3,7\"")
      ->required();
  bench->add_option("--ceiling", bspec.ceiling,
                    "refuse sizes with k(N-k) above this (default 20)");
  bench->add_option("--format", bspec.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->default_str("text");
  bench->add_option("--output", bspec.output, "write to file");

  try {
    app.parse(argc, argv);
    if (integrate->parsed()) return cmd_integrate(ispec);
    if (table->parsed()) return cmd_table(tspec);
    if (verify->parsed()) return cmd_verify(vspec);
    if (bench->parsed()) return cmd_bench(bspec);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
