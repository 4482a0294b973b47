#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "app/cache.hpp"
#include "app/families.hpp"
#include "app/verify.hpp"
#include "projmon/analysis.hpp"
#include "projmon/classify.hpp"
#include "projmon/error.hpp"
#include "projmon/normalizer.hpp"
#include "projmon/serialize.hpp"

namespace {

using namespace projmon;
using app::FamilyParams;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Common {
  std::string in, out, field = "Q", cache;
  std::size_t cap = kDefaultCap;
  bool text = false;
  std::uint64_t seed = 0;
};

class Usage : public Error {
 public:
  using Error::Error;
};

json read_json(const std::string& path) {
  if (path.empty()) throw Usage("--in FILE is required");
  std::ifstream is(path);
  if (!is) throw Usage("cannot open " + path);
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw Usage(path + ": " + e.what());
  }
}

Monoid load(const Common& c) {
  json j = read_json(c.in);
  if (j.contains("descriptor")) j = j.at("descriptor");
  try {
    return monoid_from(descriptor_from_json(j));
  } catch (const json::exception& e) {
    throw Usage(c.in + ": " + e.what());
  }
}

void close_with(Monoid& m, const Common& c) {
  if (c.cache.empty()) m.close(c.cap);
  else app::close_cached(m, c.cap, c.cache);
}

// Text output is the JSON content laid out as indented "key: value" lines.
void render_text(std::ostream& os, const json& j, int depth = 0) {
  std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      bool leaf = !v.is_structured() || (v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) {
                                           return x.is_object();
                                         }));
      if (leaf) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      } else {
        os << pad << k << ":\n";
        render_text(os, v, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      os << pad << "-\n";
      render_text(os, v, depth + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& j, const Common& c) {
  std::ostringstream s;
  if (c.text) render_text(s, j);
  else s << j.dump(2) << '\n';
  if (c.out.empty()) {
    std::cout << s.str();
  } else {
    std::ofstream os(c.out);
    if (!os) throw Usage("cannot write " + c.out);
    os << s.str();
  }
}

int cmd_construct(const Common& c, const FamilyParams& p) {
  Field f(FieldSpec::parse(c.field));
  Monoid m = app::build_family(p, f);
  emit(to_json(descriptor_of(m)), c);
  std::cerr << m.generators().size() << " generators\n";
  return kOk;
}

int cmd_close(const Common& c, bool list) {
  Monoid m = load(c);
  app::CacheOutcome cache;
  if (c.cache.empty()) m.close(c.cap);
  else cache = app::close_cached(m, c.cap, c.cache);
  json j;
  j["descriptor"] = to_json(descriptor_of(m));
  if (m.finite()) {
    j["status"] = "Finite";
    j["size"] = m.size();
    if (list) j["elements"] = elements_to_json(m);
  } else {
    j["status"] = "CapExceeded";
    j["cap"] = c.cap;
    if (m.witness()) j["witness"] = matrix_rows(m.witness()->element);
  }
  emit(j, c);
  if (!c.cache.empty()) std::cerr << "cache " << (cache.hit ? "hit" : cache.discarded ? "discarded" : "miss") << '\n';
  return m.finite() ? kOk : kCap;
}

ReportRequest request_from(const std::string& list, bool& kernels, bool& images) {
  ReportRequest r{false, false, false, false};
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item == "kernels") kernels = true;
    else if (item == "images") images = true;
    else if (item == "trace") r.trace = true;
    else if (item == "card") r.card = true;
    else if (item == "star") r.star = true;
    else if (item == "split") r.split = true;
    else if (item != "complete" && item != "irreducible" && item != "cr") throw Usage("unknown report item " + item);
  }
  return r;
}

int cmd_analyze(const Common& c, const std::string& report) {
  Monoid m = load(c);
  close_with(m, c);
  require_finite(m, "analyze");
  json j;
  if (report.empty()) {
    j = to_json(analyze(m));
  } else {
    bool k = false, l = false;
    ReportRequest req = request_from(report, k, l);
    json full = to_json(analyze(m, req));
    std::stringstream s(report);
    std::string item;
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"kernels", {"kernels"}},
        {"images", {"images"}},
        {"complete", {"complete", "missing"}},
        {"irreducible", {"irreducible", "invariantSubspace"}},
        {"cr", {"completelyReducible", "directSum", "decomposition", "kernelSum", "imageIntersection"}},
        {"trace", {"traceFull", "tracePairs"}},
        {"card", {"card", "zeroPresent"}},
        {"star", {"star"}},
        {"split", {"split", "projectionPartIsAllSingulars"}},
    };
    while (std::getline(s, item, ',')) {
      for (const auto& key : keys.at(item)) {
        if (full.contains(key)) j[key] = full[key];
      }
    }
  }
  emit(j, c);
  return kOk;
}

int cmd_normalizer(const Common& c) {
  Monoid m = load(c);
  close_with(m, c);
  require_finite(m, "normalizer");
  emit(to_json(normalizing_reflections(m)), c);
  return kOk;
}

int cmd_classify(const Common& c, bool dim3) {
  Monoid m = load(c);
  close_with(m, c);
  require_finite(m, "classify");
  try {
    emit(dim3 ? to_json(classify_r3(m)) : to_json(classify_c2(m)), c);
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kFail;
  }
  return kOk;
}

int cmd_mingen(const Common& c, const std::vector<std::size_t>& subset) {
  Monoid m = load(c);
  close_with(m, c);
  require_finite(m, "mingen");
  std::vector<Matrix> p;
  if (subset.empty()) {
    p = m.generators();
  } else {
    for (auto k : subset) {
      if (k >= m.generators().size()) throw Usage("generator index " + std::to_string(k) + " out of range");
      p.push_back(m.generators()[k]);
    }
  }
  bool gen = generates(p, m);
  bool minimal = gen && is_minimal_generating(p, m);
  emit({{"size", p.size()}, {"generates", gen}, {"minimal", minimal}}, c);
  return kOk;
}

int cmd_verify(const Common& c, const std::vector<int>& only) {
  auto records = app::run_checks(app::paper_suite({c.cap, c.seed}), only);
  bool all = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  if (c.text) {
    std::ostringstream s;
    for (const auto& r : records) app::print_record(s, r);
    for (const auto& k : app::summarize(records)) {
      s << "criterion " << k.criterion << ": " << (k.pass ? "PASS" : "FAIL") << " (" << k.checks - k.failed << '/'
        << k.checks << ")\n";
    }
    if (c.out.empty()) std::cout << s.str();
    else std::ofstream(c.out) << s.str();
  } else {
    json a = json::array();
    for (const auto& r : records) a.push_back(app::to_json(r));
    emit({{"suite", "paper"}, {"pass", all}, {"records", a}}, c);
  }
  return all ? kOk : kFail;
}

void common_flags(CLI::App* sub, Common& c) {
  sub->add_option("--in", c.in, "input descriptor JSON");
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--field", c.field, "field: Q, C<N> or F<p>");
  sub->add_option("--cap", c.cap, "closure cap")->check(CLI::PositiveNumber);
  sub->add_option("--cache", c.cache, "closure cache directory");
  auto* j = sub->add_flag("--json", "JSON output (default)");
  sub->add_flag("--text", c.text, "text output")->excludes(j);
  sub->add_option("--seed", c.seed, "seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite projection monoids: construction, closure and analysis"};
  app.require_subcommand(1);
  Common c;
  FamilyParams fp;
  std::string report, suite = "paper";
  bool dim3 = false, list = false;
  std::vector<std::size_t> subset;
  std::vector<int> only;

  auto* construct = app.add_subcommand("construct", "write the generators of a catalog family");
  construct->add_option("--family", fp.family, "A, Aplus, B, X, Y, Z, C or D")->required();
  construct->add_option("--n", fp.n, "dimension parameter");
  construct->add_option("--t", fp.t, "order of the root group");
  construct->add_option("--i", fp.i, "index for X and Z");
  construct->add_option("--s", fp.s, "S for X, X for D (e.g. 1 -1 e(1/3))");
  construct->add_option("--w", fp.w, "w for Y");
  auto* close = app.add_subcommand("close", "close a monoid");
  close->add_flag("--elements", list, "list the elements");
  auto* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("--report", report, "comma list: kernels,images,complete,irreducible,cr,trace,card,star,split");
  auto* normalizer = app.add_subcommand("normalizer", "normalising reflection group");
  auto* classify = app.add_subcommand("classify", "classify an irreducible monoid");
  classify->add_flag("--dim3", dim3, "embed into A3 or B3^2 instead");
  auto* mingen = app.add_subcommand("mingen", "test a generator subset for (minimal) generation");
  mingen->add_option("--subset", subset, "generator indices (default all)")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  verify->add_option("--only", only, "criterion numbers")->delimiter(',');
  for (auto* s : {construct, close, analyze, normalizer, classify, mingen, verify}) common_flags(s, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(c, fp);
    if (*close) return cmd_close(c, list);
    if (*analyze) return cmd_analyze(c, report);
    if (*normalizer) return cmd_normalizer(c);
    if (*classify) return cmd_classify(c, dim3);
    if (*mingen) return cmd_mingen(c, subset);
    if (*verify) return cmd_verify(c, only);
  } catch (const CapExceeded& e) {
    std::cerr << "CapExceeded: " << e.what() << '\n';
    return kCap;
  } catch (const Usage& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
