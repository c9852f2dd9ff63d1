#include "vmrt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "vmrt/compactification.hpp"
#include "vmrt/family.hpp"
#include "vmrt/omega_builder.hpp"

namespace vmrt {

namespace {

constexpr int kMaxAttempts = 8;

struct Outcome {
  enum class Kind { Pass, Skip, Fail };
  Kind kind = Kind::Pass;
  std::string witness;
  std::map<std::string, std::size_t> tallies;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string why) { return {Kind::Fail, std::move(why), {}}; }
  static Outcome skip(std::string why) { return {Kind::Skip, std::move(why), {}}; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckResult run_samples(const std::string& name, std::size_t count, unsigned jobs,
                        const std::function<Outcome(std::size_t)>& body) {
  const auto start = Clock::now();
  std::vector<Outcome> outcomes(count);
  auto guarded = [&](std::size_t i) {
    try {
      outcomes[i] = body(i);
    } catch (const std::exception& e) {
      outcomes[i] = Outcome::fail(e.what());
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) guarded(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  CheckResult out;
  out.name = name;
  out.samples = count;
  for (std::size_t i = 0; i < count; ++i) {
    const Outcome& o = outcomes[i];
    for (const auto& [key, value] : o.tallies) out.details[key] += value;
    switch (o.kind) {
      case Outcome::Kind::Pass: ++out.passes; break;
      case Outcome::Kind::Skip: ++out.skips; break;
      case Outcome::Kind::Fail:
        ++out.failures;
        if (out.witness.size() < 3) out.witness.push_back("sample " + std::to_string(i) + ": " + o.witness);
        break;
    }
  }
  out.seconds = seconds_since(start);
  return out;
}

struct Config {
  Vec p;
  GroupElement x;
};

Config draw_config(const VarietyChart& chart, const OmegaForm& omega, SampleStream& stream) {
  Vec p = stream.next_vector(chart.param_dim());
  while (!frame_is_nondegenerate(chart, p)) p = stream.next_vector(chart.param_dim());
  return {std::move(p), unflatten(omega, stream.next_vector(omega.dim_g()))};
}

Vec random_combination(const std::vector<Vec>& vectors, SampleStream& stream) {
  Vec out = zeros(vectors.front().size());
  for (const auto& v : vectors) out = out + stream.next_scalar() * v;
  return out;
}

GroupElement random_element(const OmegaForm& omega, SampleStream& stream) {
  return unflatten(omega, stream.next_vector(omega.dim_g()));
}

class Suite {
 public:
  Suite(const VarietySpec& spec, const OmegaForm& omega, const VerifyOptions& options)
      : chart_(spec.chart), omega_(omega), options_(options), family_(omega, spec.chart) {}

  CheckResult isotropy() const {
    return run_samples("isotropy", 1, 1, [&](std::size_t) {
      const IsotropyCertificate cert = certify_isotropic(*chart_, omega_);
      Outcome o;
      o.tallies["frame_pairs"] = cert.pairs_checked;
      if (cert.proven()) return o;
      o.kind = Outcome::Kind::Fail;
      std::ostringstream why;
      why << "omega(f_" << cert.frame_a << ", f_" << cert.frame_b << ") = " << to_string(cert.witness_value);
      if (cert.witness_point) why << " at p = " << to_string(*cert.witness_point);
      o.witness = why.str();
      return o;
    });
  }

  CheckResult metabelian() const {
    return run_samples("metabelian", options_.samples + 2, options_.jobs, [&](std::size_t i) {
      if (i == 0) {
        return associativity_holds_symbolically(omega_) ? Outcome::pass()
                                                        : Outcome::fail("associativity is not a polynomial identity");
      }
      if (i == 1) {
        return commutator_identity_holds_symbolically(omega_)
                   ? Outcome::pass()
                   : Outcome::fail("commutator of (w,0), (w',0) differs from (0, omega(w,w'))");
      }
      SampleStream stream(sample_seed(options_.seed, "metabelian", i));
      const Config c = draw_config(*chart_, omega_, stream);
      const std::vector<Vec> frame = affine_tangent_frame(*chart_, c.p);
      const Vec u = random_combination(frame, stream);
      const Vec v = random_combination(frame, stream);
      const Vec levi_tangent = levi_tensor(omega_, c.x, u, v);
      if (!is_zero(levi_tangent)) return Outcome::fail("Levi tensor on VMRT tangents = " + to_string(levi_tangent));
      const Vec a = stream.next_vector(omega_.dim_w());
      const Vec b = stream.next_vector(omega_.dim_w());
      const Vec levi = levi_tensor(omega_, c.x, a, b);
      if (levi != omega_.apply(a, b)) return Outcome::fail("Levi tensor " + to_string(levi) + " != omega(u,v)");
      return Outcome::pass();
    });
  }

  CheckResult h_t() const {
    return run_samples("h_t", options_.samples, options_.jobs, [&](std::size_t i) {
      SampleStream stream(sample_seed(options_.seed, "h_t", i));
      Outcome o;
      for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const Config c = draw_config(*chart_, omega_, stream);
        const Vec delta = stream.next_vector(chart_->param_dim());
        const Scalar t = stream.next_nonzero();
        try {
          const PlueckerLine plane = family_.plane(c.p, c.x);
          const GrassmannChart g1 = GrassmannChart::primary_for(plane);
          const auto g2 = GrassmannChart::secondary_for(plane);
          if (!g2) {
            ++o.tallies["resamples"];
            continue;
          }
          const HtCheck r1 = check_h_t_identity(family_, g1, c.p, c.x, delta, t);
          const HtCheck r2 = check_h_t_identity(family_, *g2, c.p, c.x, delta, t);
          if (!r1.passed()) return Outcome::fail("primary chart: " + r1.detail);
          if (!r2.passed()) return Outcome::fail("second chart: " + r2.detail);
          ++o.tallies["second_chart_passes"];
          if (!basepoint_variation_is_well_defined(family_, g1, c.x, chart_->lift(c.p)))
            return Outcome::fail("basepoint variation kernel is not C(w, 0)");
          if (i < 5) {
            for (const Scalar& tt : {Scalar(0), t}) {
              if (family_.rho_tangent(g1, c.p, c.x, delta, tt) != family_.rho_tangent_symbolic(g1, c.p, c.x, delta, tt))
                return Outcome::fail("jet and symbolic derivatives disagree at t = " + to_string(tt));
            }
            ++o.tallies["symbolic_oracle_agreements"];
          }
          return o;
        } catch (const ChartMiss&) {
          ++o.tallies["resamples"];
        }
      }
      o.kind = Outcome::Kind::Skip;
      return o;
    });
  }

  CheckResult tensor_split() const {
    return run_samples("tensor_split", options_.samples, options_.jobs, [&](std::size_t i) {
      return with_frames("tensor_split", i, [](const TensorSplitFrames&) { return Outcome::pass(); });
    });
  }

  CheckResult splitting_type() const {
    const std::size_t d = chart_->param_dim();
    return run_samples("splitting_type", options_.samples, options_.jobs, [&](std::size_t i) {
      return with_frames("splitting_type", i, [d](const TensorSplitFrames& f) {
        const SplittingWitness w = splitting_type_witness(f.j0, f.j_inf, d);
        if (w.passed) return Outcome::pass();
        std::string ranks;
        for (auto r : w.ranks_at_probes) ranks += " " + std::to_string(r);
        return Outcome::fail("rank F(0) = " + std::to_string(w.rank_at_infinity) + ", ranks at probes:" + ranks);
      });
    });
  }

  CheckResult family_dimension_check(std::optional<std::size_t>& measured) const {
    return run_samples("family_dimension", 1, 1, [&](std::size_t) {
      const FamilyDimension fd = family_dimension(family_, sample_seed(options_.seed, "family_dimension", 0));
      measured = fd.max_rank;
      Outcome o;
      o.tallies["points"] = fd.points;
      o.tallies["max_rank"] = fd.max_rank;
      o.tallies["expected"] = fd.expected;
      if (!fd.matches()) {
        o.kind = Outcome::Kind::Fail;
        o.witness = "Jacobian rank " + std::to_string(fd.max_rank) + ", expected " + std::to_string(fd.expected);
      }
      return o;
    });
  }

  CheckResult compactification() const {
    const std::size_t fiber = options_.samples;
    const std::size_t half = (options_.samples + 1) / 2;
    return run_samples("compactification", fiber + 2 * half, options_.jobs, [&](std::size_t i) {
      SampleStream stream(sample_seed(options_.seed, "compactification", i));
      try {
        if (i < fiber) return fiber_pair(i, stream);
        if (i < fiber + half) return equivariance(stream);
        return line_closure(stream);
      } catch (const DirectionNotOnChart& e) {
        Outcome o = Outcome::skip(e.what());
        o.tallies["not_on_chart"] = 1;
        return o;
      } catch (const UnsupportedChart& e) {
        Outcome o = Outcome::skip(e.what());
        o.tallies["not_on_chart"] = 1;
        return o;
      }
    });
  }

 private:
  Outcome with_frames(const std::string& check, std::size_t i,
                      const std::function<Outcome(const TensorSplitFrames&)>& body) const {
    SampleStream stream(sample_seed(options_.seed, check, i));
    Outcome o;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const Config c = draw_config(*chart_, omega_, stream);
      try {
        const GrassmannChart g = family_.primary_chart(c.p, c.x);
        Outcome inner = body(tensor_split_frames(family_, g, c.p, c.x));
        inner.tallies.merge(o.tallies);
        return inner;
      } catch (const ChartMiss&) {
        ++o.tallies["resamples"];
      } catch (const RankDeficient&) {
        ++o.tallies["resamples"];
      }
    }
    o.kind = Outcome::Kind::Skip;
    return o;
  }

  // Four kinds of pairs: moved within the T_s-coset, random base, other chart
  // point, and the same line written with a rescaled direction.
  Outcome fiber_pair(std::size_t i, SampleStream& stream) const {
    const Config c = draw_config(*chart_, omega_, stream);
    const Vec w = chart_->lift(c.p);
    Vec w2 = w;
    GroupElement y;
    const int kind = static_cast<int>(i % 4);
    switch (kind) {
      case 0: {
        const Vec shift = random_combination(affine_tangent_frame(*chart_, c.p), stream);
        y = multiply(omega_, c.x, GroupElement{shift, zeros(omega_.dim_u())});
        y = point_on_line(omega_, y, w, stream.next_scalar());
        break;
      }
      case 1:
        y = random_element(omega_, stream);
        break;
      case 2: {
        Config other = draw_config(*chart_, omega_, stream);
        while (other.p == c.p) other = draw_config(*chart_, omega_, stream);
        y = c.x;
        w2 = chart_->lift(other.p);
        break;
      }
      default:
        y = point_on_line(omega_, c.x, w, stream.next_scalar());
        w2 = stream.next_nonzero() * w;
        break;
    }
    const HorizontalLine la = line_through(omega_, c.x, w);
    const HorizontalLine lb = line_through(omega_, y, w2);
    const bool oracle = la.direction == lb.direction &&
                        in_same_coset(omega_, frame_matrix(*chart_, c.p), la.base, lb.base);
    const bool equal = mu_hat(omega_, OnSection{chart_, la}) == mu_hat(omega_, OnSection{chart_, lb});

    Outcome o;
    o.tallies["fiber_pairs"] = 1;
    if (oracle) o.tallies["fiber_equal_pairs"] = 1;
    if ((kind == 0 || kind == 3) && !oracle) return Outcome::fail("coset oracle rejects a pair built inside T_s");
    if (kind == 2 && oracle) return Outcome::fail("coset oracle merges distinct directions");
    if (equal != oracle) {
      o.kind = Outcome::Kind::Fail;
      o.witness = std::string("mu_hat says ") + (equal ? "equal" : "distinct") + ", coset oracle disagrees";
    }
    return o;
  }

  Outcome equivariance(SampleStream& stream) const {
    const Config c = draw_config(*chart_, omega_, stream);
    const GroupElement g = random_element(omega_, stream);
    const GroupElement h = random_element(omega_, stream);
    const TangentDirectionPoint alpha{chart_, c.p, c.x};
    Outcome o;
    o.tallies["equivariance"] = 1;
    for (const PBundlePoint& pt : {PBundlePoint(OffSection{alpha}), PBundlePoint(OnSection{chart_, rho(omega_, alpha)})}) {
      const XPoint image = mu_hat(omega_, pt);
      if (mu_hat(omega_, g_action(omega_, g, pt)) != g_action(omega_, g, image))
        return Outcome::fail("mu_hat(g . alpha) != g . mu_hat(alpha)");
      if (g_action(omega_, g, g_action(omega_, h, image)) != g_action(omega_, multiply(omega_, g, h), image))
        return Outcome::fail("g . (h . pt) != (g h) . pt");
      if (g_action(omega_, identity_element(omega_), image) != image) return Outcome::fail("identity acts nontrivially");
    }
    if (g_action(omega_, g, XPoint(Interior{c.x})) != XPoint(Interior{multiply(omega_, g, c.x)}))
      return Outcome::fail("action on the interior differs from multiplication");
    return o;
  }

  Outcome line_closure(SampleStream& stream) const {
    const Config c = draw_config(*chart_, omega_, stream);
    const Vec w = chart_->lift(c.p);
    std::vector<Scalar> grid;
    for (int t = -3; t <= 3; ++t) grid.emplace_back(t);
    grid.push_back(stream.next_scalar());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const CompactifiedLine cl = compactified_line(omega_, chart_, c.p, c.x, grid);
    const HorizontalLine line = line_through(omega_, c.x, w);
    Outcome o;
    o.tallies["lines"] = 1;
    if (!is_boundary(cl.at_infinity)) return Outcome::fail("point at infinity is interior");
    std::size_t boundary_hits = 0;
    const TangentDirectionPoint alpha{chart_, c.p, c.x};
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (is_boundary(cl.interior[k])) ++boundary_hits;
      const GroupElement& xt = std::get<Interior>(cl.interior[k]).x;
      for (std::size_t m = 0; m < k; ++m)
        if (cl.interior[m] == cl.interior[k]) return Outcome::fail("interior points repeat");
      if (line_through(omega_, xt, w) != line) return Outcome::fail("interior point leaves the line");
      if (mu_hat(omega_, OffSection{phi_action(omega_, grid[k], alpha)}) != cl.interior[k])
        return Outcome::fail("phi_t orbit leaves the compactified line");
      if (mu_hat(omega_, OnSection{chart_, line_through(omega_, xt, w)}) != cl.at_infinity)
        return Outcome::fail("line meets the boundary in more than one point");
    }
    if (boundary_hits != 0) return Outcome::fail("interior image meets the boundary");
    return o;
  }

  ChartRef chart_;
  OmegaForm omega_;
  VerifyOptions options_;
  LineFamily family_;
};

bool wanted(const VerifyOptions& options, const std::string& name) {
  return options.checks.empty() ||
         std::find(options.checks.begin(), options.checks.end(), name) != options.checks.end();
}

}  // namespace

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"isotropy",       "metabelian",       "h_t",
                                              "tensor_split",   "splitting_type",   "family_dimension",
                                              "compactification"};
  return names;
}

std::uint64_t sample_seed(std::uint64_t seed, const std::string& check, std::size_t index) {
  // FNV-1a over the check name, then a splitmix64 finalizer.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : check) h = (h ^ ch) * 1099511628211ull;
  std::uint64_t z = seed ^ (h + 0x9e3779b97f4a7c15ull * (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

VerificationReport run_verification(const VarietySpec& spec, const VerifyOptions& options) {
  for (const auto& name : options.checks) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw ParseError("unknown check '" + name + "'");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.label = spec.chart->label();
  report.seed = options.seed;
  report.samples = options.samples;

  OmegaForm omega;
  if (spec.omega) {
    omega = *spec.omega;
    report.omega_source = "explicit";
  } else {
    OmegaBuildOptions build;
    build.seed = options.seed;
    const OmegaConstruction c = build_omega(*spec.chart, build);
    omega = c.omega;
    report.omega_source = "built";
    report.dims.dim_w_prime = c.dim_w_prime();
  }
  require_same_size(omega.dim_w(), spec.chart->ambient_dim(), "omega dim W vs chart");
  report.dims.dim_w = omega.dim_w();
  report.dims.dim_u = omega.dim_u();
  report.dims.d = spec.chart->param_dim();
  report.dims.n = omega.dim_g();

  const Suite suite(spec, omega, options);
  if (wanted(options, "isotropy")) {
    report.checks.push_back(suite.isotropy());
    // Everything downstream assumes isotropy.
    if (!report.checks.back().passed()) {
      report.seconds = seconds_since(start);
      return report;
    }
  }
  if (wanted(options, "metabelian")) report.checks.push_back(suite.metabelian());
  if (wanted(options, "h_t")) report.checks.push_back(suite.h_t());
  if (wanted(options, "tensor_split")) report.checks.push_back(suite.tensor_split());
  if (wanted(options, "splitting_type")) report.checks.push_back(suite.splitting_type());
  if (wanted(options, "family_dimension"))
    report.checks.push_back(suite.family_dimension_check(report.dims.family_dim));
  if (wanted(options, "compactification")) report.checks.push_back(suite.compactification());
  report.seconds = seconds_since(start);
  return report;
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
  using nlohmann::ordered_json;
  auto optional_dim = [](const std::optional<std::size_t>& v) { return v ? ordered_json(*v) : ordered_json(); };
  ordered_json doc;
  doc["label"] = report.label;
  doc["seed"] = report.seed;
  doc["samples"] = report.samples;
  doc["omegaSource"] = report.omega_source;
  doc["passed"] = report.passed();
  doc["dims"] = {{"dimW", report.dims.dim_w},
                 {"dimU", report.dims.dim_u},
                 {"dimWprime", optional_dim(report.dims.dim_w_prime)},
                 {"d", report.dims.d},
                 {"n", report.dims.n},
                 {"familyDim", optional_dim(report.dims.family_dim)}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed();
    entry["samples"] = c.samples;
    entry["passes"] = c.passes;
    entry["skips"] = c.skips;
    entry["failures"] = c.failures;
    entry["details"] = ordered_json::object();
    for (const auto& [k, v] : c.details) entry["details"][k] = v;
    entry["witness"] = c.witness.empty() ? ordered_json() : ordered_json(c.witness);
    if (include_timing) entry["seconds"] = c.seconds;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  if (include_timing) doc["wallSeconds"] = report.seconds;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::ostringstream out;
  out << report.label << "  seed " << report.seed << "  omega " << report.omega_source << "\n";
  out << "dimW " << report.dims.dim_w << "  dimU " << report.dims.dim_u << "  dimW' " << opt(report.dims.dim_w_prime)
      << "  d " << report.dims.d << "  n " << report.dims.n << "  familyDim " << opt(report.dims.family_dim) << "\n\n";
  out << std::left << std::setw(18) << "check" << std::right << std::setw(8) << "samples" << std::setw(8) << "pass"
      << std::setw(8) << "skip" << std::setw(8) << "fail" << std::setw(10) << "seconds" << "  verdict\n";
  for (const auto& c : report.checks) {
    out << std::left << std::setw(18) << c.name << std::right << std::setw(8) << c.samples << std::setw(8) << c.passes
        << std::setw(8) << c.skips << std::setw(8) << c.failures << std::setw(10) << std::fixed
        << std::setprecision(3) << c.seconds << "  " << (c.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& w : c.witness) out << "    " << w << "\n";
  }
  out << "\n" << (report.passed() ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(3) << report.seconds
      << " s)\n";
  return out.str();
}

}  // namespace vmrt
