#include "vmrt/variety.hpp"

#include <algorithm>
#include <functional>

namespace vmrt {

VarietyChart::VarietyChart(std::string label, std::size_t param_dim, PolyVec coords,
                           std::vector<std::string> variable_names)
    : label_(std::move(label)),
      param_dim_(param_dim),
      coords_(std::move(coords)),
      names_(std::move(variable_names)) {
  for (const auto& c : coords_) {
    if (c.variable_count() > param_dim_) {
      throw DimensionMismatch("chart '" + label_ + "' uses more variables than its dimension");
    }
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < param_dim_; ++i) names_.push_back("x" + std::to_string(i + 1));
  }
  require_same_size(names_.size(), param_dim_, "chart variable names");
  frame_.push_back(coords_);
  for (std::size_t a = 0; a < param_dim_; ++a) {
    PolyVec d;
    d.reserve(coords_.size());
    for (const auto& c : coords_) d.push_back(c.derivative(a));
    frame_.push_back(std::move(d));
  }
}

Vec VarietyChart::lift(const Vec& p) const {
  require_same_size(p.size(), param_dim_, "chart parameter point");
  return evaluate_all<Scalar>(coords_, p);
}

JetVec VarietyChart::lift(const JetVec& p) const {
  require_same_size(p.size(), param_dim_, "chart parameter point");
  return evaluate_all<Jet1>(coords_, p);
}

Vec VarietyChart::pushforward(const Vec& p, const Vec& delta) const {
  require_same_size(delta.size(), param_dim_, "chart direction");
  Vec out = zeros(ambient_dim());
  for (std::size_t a = 0; a < param_dim_; ++a) {
    if (delta[a] == 0) continue;
    out = out + delta[a] * evaluate_all<Scalar>(frame_[a + 1], p);
  }
  return out;
}

std::optional<Vec> VarietyChart::locate(const Vec& w) const {
  require_same_size(w.size(), ambient_dim(), "locate direction");
  std::optional<std::size_t> constant_index;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].variable_count() == 0 && !coords_[k].is_zero()) {
      constant_index = k;
      break;
    }
  }
  if (!constant_index || w[*constant_index] == 0) return std::nullopt;
  const Scalar c0 = coords_[*constant_index].coefficient({});
  const Scalar scale = c0 / w[*constant_index];

  Vec p(param_dim_);
  for (std::size_t i = 0; i < param_dim_; ++i) {
    bool found = false;
    for (std::size_t k = 0; k < coords_.size() && !found; ++k) {
      const MultiPoly& c = coords_[k];
      if (c.total_degree() != 1) continue;
      MultiPoly::Exponent e(i + 1, 0);
      e[i] = 1;
      const Scalar slope = c.coefficient(e);
      const Scalar offset = c.coefficient({});
      if (slope == 0 || c.term_count() != (offset == 0 ? 1u : 2u)) continue;
      p[i] = (scale * w[k] - offset) / slope;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  if (!is_zero(wedge(lift(p), w))) return std::nullopt;
  return p;
}

VarietyChart VarietyChart::reparametrized(const PolyVec& images, std::size_t new_param_dim,
                                          std::string new_label) const {
  require_same_size(images.size(), param_dim_, "reparametrization");
  PolyVec coords;
  for (const auto& c : coords_) coords.push_back(c.substitute(images));
  return VarietyChart(std::move(new_label), new_param_dim, std::move(coords));
}

std::vector<Vec> affine_tangent_frame(const VarietyChart& chart, const Vec& p) {
  std::vector<Vec> frame;
  for (const auto& f : chart.frame_polys()) frame.push_back(evaluate_all<Scalar>(f, p));
  if (rank(Mat::from_rows(frame)) != chart.param_dim() + 1) {
    throw FrameDegenerate("chart '" + chart.label() + "' is not immersed at " + to_string(p));
  }
  return frame;
}

bool frame_is_nondegenerate(const VarietyChart& chart, const Vec& p) {
  std::vector<Vec> frame;
  for (const auto& f : chart.frame_polys()) frame.push_back(evaluate_all<Scalar>(f, p));
  return rank(Mat::from_rows(frame)) == chart.param_dim() + 1;
}

Mat frame_matrix(const VarietyChart& chart, const Vec& p) {
  return Mat::from_columns(affine_tangent_frame(chart, p));
}

IsotropyCertificate certify_isotropic(const VarietyChart& chart, const OmegaForm& omega) {
  require_same_size(chart.ambient_dim(), omega.dim_w(), "chart ambient dimension vs dim W");
  IsotropyCertificate cert;
  cert.label = chart.label();
  const auto& frame = chart.frame_polys();
  for (std::size_t a = 0; a < frame.size(); ++a)
    for (std::size_t b = a + 1; b < frame.size(); ++b) {
      ++cert.pairs_checked;
      const PolyVec values = omega.apply<MultiPoly>(frame[a], frame[b]);
      const auto bad = std::find_if(values.begin(), values.end(),
                                    [](const MultiPoly& q) { return !q.is_zero(); });
      if (bad == values.end()) continue;
      // A nonzero polynomial: find a parameter point where it does not vanish,
      // trying the origin first.
      Vec point = zeros(chart.param_dim());
      SampleStream stream(1);
      while (bad->evaluate(point) == 0) point = stream.next_vector(chart.param_dim());
      cert.status = IsotropyCertificate::Status::Failed;
      cert.witness_point = point;
      cert.frame_a = a;
      cert.frame_b = b;
      cert.witness_value = omega.apply(evaluate_all<Scalar>(frame[a], point),
                                       evaluate_all<Scalar>(frame[b], point));
      return cert;
    }
  cert.status = IsotropyCertificate::Status::Proven;
  return cert;
}

namespace {

// Exponent vectors of length r summing to k, in descending lexicographic order.
std::vector<std::vector<std::uint32_t>> homogeneous_exponents(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(r, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
    if (pos + 1 == r) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, static_cast<std::uint32_t>(k));
  return out;
}

}  // namespace

VarietyChart veronese_chart(std::size_t r, std::size_t k) {
  if (r < 2 || k < 1) throw UnsupportedChart("Veronese chart needs r >= 2 and k >= 1");
  PolyVec coords;
  for (const auto& e : homogeneous_exponents(r, k)) {
    // x_0 = 1; the affine variables are x_1 .. x_{r-1}.
    coords.push_back(MultiPoly::monomial(MultiPoly::Exponent(e.begin() + 1, e.end()), Scalar(1)));
  }
  std::vector<std::string> names;
  if (r == 2) {
    names = {"t"};
  } else if (r == 3) {
    names = {"s", "t"};
  }
  return VarietyChart("veronese-" + std::to_string(r) + "-" + std::to_string(k), r - 1,
                      std::move(coords), std::move(names));
}

VarietyChart veronese_of(const VarietyChart& z, std::size_t k, std::string label) {
  PolyVec coords;
  for (const auto& e : homogeneous_exponents(z.ambient_dim(), k)) {
    MultiPoly m(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) m *= z.coords()[i].pow(e[i]);
    }
    coords.push_back(std::move(m));
  }
  return VarietyChart(std::move(label), z.param_dim(), std::move(coords), z.variable_names());
}

VarietyChart full_linear_chart(std::size_t n) {
  PolyVec coords{MultiPoly(1)};
  for (std::size_t i = 0; i + 1 < n; ++i) coords.push_back(MultiPoly::variable(i));
  return VarietyChart("linear-" + std::to_string(n), n - 1, std::move(coords));
}

VarietyChart plane_conic_chart() {
  const MultiPoly t = MultiPoly::variable(0);
  return VarietyChart("flat-conic", 1, PolyVec{MultiPoly(1), t, t * t}, {"t"});
}

std::vector<std::string> builtin_names() {
  return {"veronese-2-3", "veronese-2-4", "veronese-3-3", "flat-conic",
          "linear-3",     "v3-conic",     "twisted-cubic-adversarial"};
}

VarietySpec builtin_spec(const std::string& name) {
  auto share = [](VarietyChart c) { return std::make_shared<const VarietyChart>(std::move(c)); };
  if (name == "veronese-2-3") return {share(veronese_chart(2, 3)), std::nullopt};
  if (name == "veronese-2-4") return {share(veronese_chart(2, 4)), std::nullopt};
  if (name == "veronese-3-3") return {share(veronese_chart(3, 3)), std::nullopt};
  if (name == "flat-conic") return {share(plane_conic_chart()), OmegaForm(3, 0)};
  if (name == "linear-3") return {share(full_linear_chart(3)), OmegaForm(3, 0)};
  if (name == "v3-conic") return {share(veronese_of(plane_conic_chart(), 3, "v3-conic")), std::nullopt};
  if (name == "twisted-cubic-adversarial") {
    VarietyChart c = veronese_chart(2, 3);
    OmegaForm omega(4, 1);
    omega.set(0, 1, Vec{Scalar(1)});
    return {share(VarietyChart("twisted-cubic-adversarial", 1, c.coords(), {"t"})), omega};
  }
  throw UnsupportedChart("unknown builtin variety '" + name + "'");
}

}  // namespace vmrt
