#include "core/complex.hpp"

#include <algorithm>
#include <set>

#include "core/incidence.hpp"
#include "core/size_guard.hpp"

namespace mobiuslab {

namespace {

bool face_order(const SimplicialComplex::Face& a, const SimplicialComplex::Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_labels, std::vector<Face> faces) {
  std::set<Face> closed;
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.back() >= vertex_labels.size())
      throw Error(ErrorCode::InvalidArgument, "face uses vertex " + std::to_string(f.back()) + " out of range");
    if (f.size() > 30) throw Error(ErrorCode::SizeGuard, "face with more than 30 vertices");
    if (closed.count(f)) continue;
    const std::uint64_t count = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1U) sub.push_back(f[i]);
      closed.insert(std::move(sub));
    }
  }
  SimplicialComplex s;
  s.labels_ = std::move(vertex_labels);
  s.faces_.assign(closed.begin(), closed.end());
  std::sort(s.faces_.begin(), s.faces_.end(), face_order);
  return s;
}

SimplicialComplex order_complex(const Poset& p) {
  check_size("order complex", static_cast<double>(p.size()), 20);
  std::vector<SimplicialComplex::Face> chains;
  SimplicialComplex::Face current;
  auto extend = [&](auto&& self, std::size_t x) -> void {
    current.push_back(static_cast<std::uint32_t>(x));
    chains.push_back(current);
    Poset::Bits above = p.up_set(x);
    above.reset(x);
    for_each_bit(above, [&](std::size_t y) { self(self, y); });
    current.pop_back();
  };
  for (std::size_t x = 0; x < p.size(); ++x) extend(extend, x);
  // Chains are already closed under nonempty subsets.
  return SimplicialComplex::from_faces(p.labels(), std::move(chains));
}

std::vector<Integer> level_numbers(const SimplicialComplex& s) {
  std::vector<Integer> f;
  for (const auto& face : s.faces()) {
    if (f.size() < face.size()) f.resize(face.size());
    ++f[face.size() - 1];
  }
  return f;
}

Integer euler_characteristic(const SimplicialComplex& s) {
  Integer chi;
  const auto f = level_numbers(s);
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? f[k] : Integer(-f[k]);
  return chi;
}

Poset face_poset(const SimplicialComplex& s) {
  const auto& faces = s.faces();
  const std::size_t n = faces.size();
  check_size("face poset", static_cast<double>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = "{";
    for (std::size_t k = 0; k < faces[i].size(); ++k) l += (k ? "," : "") + s.vertex_labels()[faces[i][k]];
    labels[i] = l + "}";
  }
  std::vector<Poset::Bits> up(n, Poset::Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end())) up[i].set(j);
  return Poset::from_trusted_relation(std::move(labels), std::move(up));
}

std::optional<std::size_t> is_cone(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((p.up_set(x) | p.down_set(x)).all()) return x;
  return std::nullopt;
}

MonotoneMap::MonotoneMap(Poset source, Poset target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size())
    throw Error(ErrorCode::InvalidArgument, "map has " + std::to_string(image_.size()) +
                                                " images for a source of " + std::to_string(source_.size()));
  for (auto y : image_)
    if (y >= target_.size()) throw Error(ErrorCode::InvalidArgument, "map image out of range");
  for (const auto& [a, b] : source_.covers())
    if (!target_.leq(image_[a], image_[b]))
      throw Error(ErrorCode::InvalidArgument, "map is not order preserving: '" + source_.label(a) + "' <= '" +
                                                  source_.label(b) + "' but their images are not comparable");
}

Report verify_baclawski(const MonotoneMap& f) {
  const auto& p = f.source();
  const auto& q = f.target();
  Report r;
  r.identity = "baclawski";
  const Integer mu_q = mobius_number(q);
  Integer rhs = mobius_number(p);
  r.details["mu_P"] = to_json(rhs);
  Json fibres = Json::array();
  for (std::size_t y = 0; y < q.size(); ++y) {
    Poset::Bits above = q.up_set(y);
    above.reset(y);
    Poset::Bits fibre(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
      if (q.leq(f(x), y)) fibre.set(x);
    const Integer mu_above = mobius_number(q, above);
    const Integer mu_fibre = mobius_number(p, fibre);
    rhs += mu_above * mu_fibre;
    fibres.push_back(Json{{"y", q.label(y)}, {"mu_above", to_json(mu_above)}, {"mu_fibre", to_json(mu_fibre)}});
  }
  r.lhs = to_json(mu_q);
  r.rhs = to_json(rhs);
  r.pass = mu_q == rhs;
  r.details["fibres"] = std::move(fibres);
  return r;
}

Report verify_ideal_decomposition(const Poset& s, const Poset::Bits& ideal) {
  for_each_bit(ideal, [&](std::size_t x) {
    if (!s.down_set(x).is_subset_of(ideal))
      throw Error(ErrorCode::InvalidArgument, "subset is not down-closed at '" + s.label(x) + "'");
  });
  Report r;
  r.identity = "ideal_decomposition";
  const Integer lhs = mobius_number(s);
  Integer rhs = mobius_number(s, ideal);
  const Poset::Bits outside = ~ideal;
  for_each_bit(outside, [&](std::size_t y) {
    Poset::Bits above = s.up_set(y);
    above.reset(y);
    rhs += mobius_number(s, above) * mobius_number(s, ideal & s.down_set(y));
  });
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.pass = lhs == rhs;
  return r;
}

Report retract_check(const MonotoneMap& f) {
  const auto& s = f.source();
  if (f.target().labels() != s.labels())
    throw Error(ErrorCode::InvalidArgument, "retract check needs a map from a poset to itself");
  bool decreasing = true, increasing = true, idempotent = true;
  Poset::Bits image(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    decreasing = decreasing && s.leq(f(x), x);
    increasing = increasing && s.leq(x, f(x));
    idempotent = idempotent && f(f(x)) == f(x);
    image.set(f(x));
  }
  Report r;
  r.identity = "retract";
  r.details["decreasing"] = decreasing;
  r.details["increasing"] = increasing;
  r.details["idempotent"] = idempotent;
  const Integer mu_s = mobius_number(s);
  const Integer mu_image = mobius_number(s, image);
  r.lhs = to_json(mu_image);
  r.rhs = to_json(mu_s);
  r.details["image"] = Json::array();
  for_each_bit(image, [&](std::size_t x) { r.details["image"].push_back(s.label(x)); });
  r.pass = (decreasing || increasing) && idempotent && mu_image == mu_s;
  return r;
}

Dismantling dismantle(const Poset& p) {
  Dismantling out;
  Poset current = p;
  while (current.size() > 1) {
    std::size_t victim = current.size();
    for (std::size_t x = 0; x < current.size() && victim == current.size(); ++x)
      if (current.lower_covers(x).size() == 1 || current.upper_covers(x).size() == 1) victim = x;
    if (victim == current.size()) break;
    out.deletions.push_back(current.label(victim));
    Poset::Bits keep = current.full_bits();
    keep.reset(victim);
    current = current.induced(keep);
  }
  out.core = std::move(current);
  out.dismantlable = out.core.size() == 1;
  out.mobius = mobius_number(p);
  out.pass = !out.dismantlable || out.mobius == 0;
  return out;
}

}  // namespace mobiuslab
