#include "mwr/reductions/rectangle.hpp"

#include "mwr/core/digits.hpp"

namespace mwr::reductions {

using graph::EdgeWeightedGraph;

namespace {

// Axis paired with axis i by the constraint x'_{succ(i)} = rev(x_i).
std::size_t succ(std::size_t i, std::size_t d) { return (i + 1) % d; }

DTuple on_axes(std::size_t d, std::size_t a, std::int64_t xa, std::size_t b, std::int64_t xb) {
  DTuple p(d, 0);
  p[a] = xa;
  p[b] = xb;
  return p;
}

// Four-corner gadget adding sign·w to every box whose corner on axes (a, b)
// falls in the cell [xa, xa+ga) × [xb, xb+gb) (sign = -1: mirrored to the
// negative side, the corner being the lower corner).
void cell_gadget(std::vector<WeightedPoint>& out, std::size_t d, std::size_t a, std::int64_t xa, std::int64_t ga,
                 std::size_t b, std::int64_t xb, std::int64_t gb, Int w) {
  out.push_back({on_axes(d, a, xa, b, xb), w});
  out.push_back({on_axes(d, a, xa + ga, b, xb), -w});
  out.push_back({on_axes(d, a, xa, b, xb + gb), -w});
  out.push_back({on_axes(d, a, xa + ga, b, xb + gb), w});
}

}  // namespace

std::size_t rectangle_point_census(std::int64_t n, std::size_t k, std::size_t d) {
  const auto nk = static_cast<std::size_t>(int_pow(n, static_cast<unsigned>(k)));
  std::size_t total = 2 * d * nk + 1 + 4 * d * nk;
  const std::size_t pairs = d * (d - 1) / 2;
  for (std::size_t a = 1; a <= k; ++a)
    for (std::size_t b = 1; b <= k; ++b) {
      const std::size_t e = a + b <= k + 1 ? a + b : 2 * k + 2 - a - b;
      total += pairs * 4 * static_cast<std::size_t>(int_pow(n, static_cast<unsigned>(e)));
    }
  return total;
}

Reduction<WeightedPointSet> kpartite_clique_to_rectangle(const EdgeWeightedGraph& g, std::size_t k, std::size_t d) {
  require(d >= 2, "rectangle reduction needs d >= 2");
  require(k >= 1, "rectangle reduction needs k >= 1");
  require(g.is_partite() && g.part_count() == d * k, "source must be (d x k)-partite");
  const auto n = static_cast<std::int64_t>(g.part_size());
  require(n >= 2, "part size must be at least 2");
  const std::int64_t nk = int_pow(n, static_cast<unsigned>(k));
  auto part = [&](std::size_t i, std::size_t j) { return i * k + j; };  // 0-based i, j

  std::vector<WeightedPoint> pts;
  pts.reserve(rectangle_point_census(n, k, d));

  // Within-group k-clique weights W_i(x) at x and x+1 on axis i.
  for (std::size_t i = 0; i < d; ++i)
    for (std::int64_t x = 0; x < nk; ++x) {
      const auto digits = to_digits(x, n, static_cast<unsigned>(k));
      Int w{0};
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          w += g.weight(g.vertex(part(i, a), static_cast<std::size_t>(digits[a])),
                        g.vertex(part(i, b), static_cast<std::size_t>(digits[b])));
      DTuple lo(d, 0), hi(d, 0);
      lo[i] = x;
      hi[i] = x + 1;
      pts.push_back({lo, w});
      pts.push_back({hi, -w});
    }

  // Cross-group edges between P_{ia} and P_{i'b}.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t i2 = i + 1; i2 < d; ++i2)
      for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = 1; b <= k; ++b) {
          auto w = [&](std::int64_t p, std::int64_t q) {
            return g.weight(g.vertex(part(i, a - 1), static_cast<std::size_t>(p % n)),
                            g.vertex(part(i2, b - 1), static_cast<std::size_t>(q % n)));
          };
          if (a + b <= k + 1) {
            // Upper corner: x_i = p·n^{k-a} + lower digits, digit a of x_i is p mod n.
            const std::int64_t ga = int_pow(n, static_cast<unsigned>(k - a));
            const std::int64_t gb = int_pow(n, static_cast<unsigned>(k - b));
            for (std::int64_t p = 0; p < int_pow(n, static_cast<unsigned>(a)); ++p)
              for (std::int64_t q = 0; q < int_pow(n, static_cast<unsigned>(b)); ++q)
                cell_gadget(pts, d, i, p * ga, ga, i2, q * gb, gb, w(p, q));
          } else {
            // Lower corner: x'_{succ(i)} = rev(x_i) carries digit a at place n^{a-1}.
            const std::int64_t ga = int_pow(n, static_cast<unsigned>(a - 1));
            const std::int64_t gb = int_pow(n, static_cast<unsigned>(b - 1));
            const std::size_t ra = succ(i, d), rb = succ(i2, d);
            for (std::int64_t p = 0; p < int_pow(n, static_cast<unsigned>(k + 1 - a)); ++p)
              for (std::int64_t q = 0; q < int_pow(n, static_cast<unsigned>(k + 1 - b)); ++q)
                cell_gadget(pts, d, ra, -p * ga, -ga, rb, -q * gb, -gb, w(p, q));
          }
        }

  Int mass{0};
  for (const auto& p : pts) mass += abs(p.weight);
  const Int c = Int{2} * mass + 1;

  pts.push_back({DTuple(d, 0), c});
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t s = succ(i, d);
    for (std::int64_t x = 0; x < nk; ++x) {
      const std::int64_t r = digit_reverse(x, n, static_cast<unsigned>(k));
      cell_gadget(pts, d, i, x, 1, s, -r, -1, c);
    }
  }

  ReductionCertificate cert;
  cert.reduction_id = "kpartite_clique_to_rectangle";
  cert.scale = 1;
  cert.offset = BigInt(static_cast<std::int64_t>(d + 1)) * to_big(c);
  cert.params = {{"C", to_big(c)}, {"n", n}, {"k", k}, {"d", d}};
  std::vector<std::int64_t> members;
  for (std::size_t p = 0; p < d * k; ++p)
    for (auto v : g.members(p)) members.push_back(static_cast<std::int64_t>(v));
  cert.backmap["members"] = std::move(members);
  return {WeightedPointSet(d, std::move(pts)).sorted(), std::move(cert)};
}

std::vector<std::size_t> recover_clique_from_rectangle(const ReductionCertificate& cert,
                                                       const geometry::RectangleSolution& box) {
  const auto n = static_cast<std::int64_t>(cert.param("n"));
  const auto k = static_cast<std::size_t>(cert.param("k"));
  const auto d = static_cast<std::size_t>(cert.param("d"));
  if (box.empty || box.hi.size() != d || box.lo.size() != d) throw DecodeError("box is not a restricted rectangle");
  const std::int64_t nk = int_pow(n, static_cast<unsigned>(k));
  const auto& members = cert.backmap.at("members");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d; ++i) {
    const std::int64_t x = box.hi[i];
    if (x < 0 || x >= nk) throw DecodeError("corner coordinate outside {0..n^k-1}");
    if (box.lo[succ(i, d)] != -digit_reverse(x, n, static_cast<unsigned>(k)))
      throw DecodeError("lower corner is not the digit reversal of the upper corner");
  }
  for (std::size_t i = 0; i < d; ++i) {
    const auto digits = to_digits(box.hi[i], n, static_cast<unsigned>(k));
    for (std::size_t j = 0; j < k; ++j)
      out.push_back(static_cast<std::size_t>(members.at((i * k + j) * static_cast<std::size_t>(n) +
                                                        static_cast<std::size_t>(digits[j]))));
  }
  return out;
}

}  // namespace mwr::reductions
