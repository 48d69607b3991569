#include "spreadcx/models.hpp"

#include <cmath>

#include "spreadcx/errors.hpp"
#include "spreadcx/numerics.hpp"

namespace spreadcx {

namespace {

// Slack for negative SSH hoppings produced by round-off in a drive.
constexpr double kHoppingSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void unknown_parameter(ModelKind kind, std::string_view name) {
  throw DomainError("model '" + std::string(model_name(kind)) + "' has no parameter '" +
                    std::string(name) + "'");
}

}  // namespace

ModelKind kind_of(const ModelParams& p) noexcept {
  return static_cast<ModelKind>(p.index());
}

std::string_view model_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::three_spin: return "three-spin";
    case ModelKind::xy: return "xy";
    case ModelKind::ssh: return "ssh";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "three-spin") return ModelKind::three_spin;
  if (name == "xy") return ModelKind::xy;
  if (name == "ssh") return ModelKind::ssh;
  throw DomainError("unknown model '" + std::string(name) + "' (expected three-spin, xy or ssh)");
}

double measure_prefactor(ModelKind kind) noexcept {
  return kind == ModelKind::ssh ? 1.0 / kPi : 0.5 / kPi;
}

BlochComponents components(const ThreeSpinParams& p, double k) noexcept {
  return bloch_from_components(p.j3 * std::sin(2.0 * k) - std::sin(k),
                               p.h + std::cos(k) - p.j3 * std::cos(2.0 * k));
}

BlochComponents components(const XYParams& p, double k) noexcept {
  return bloch_from_components(p.gamma * std::sin(k), p.h + std::cos(k));
}

BlochComponents components(const SSHParams& p, double k) noexcept {
  return bloch_from_components(p.t1 - p.t2 * std::cos(k), p.t2 * std::sin(k));
}

BlochComponents components(const ModelParams& p, double k) noexcept {
  return std::visit([k](const auto& q) { return components(q, k); }, p);
}

void validate(const ModelParams& p) {
  std::visit(overloaded{
                 [](const ThreeSpinParams& q) {
                   if (!std::isfinite(q.h) || !std::isfinite(q.j3))
                     throw DomainError("three-spin parameters must be finite");
                 },
                 [](const XYParams& q) {
                   if (!std::isfinite(q.h) || !std::isfinite(q.gamma))
                     throw DomainError("xy parameters must be finite");
                 },
                 [](const SSHParams& q) {
                   if (!std::isfinite(q.t1) || !std::isfinite(q.t2))
                     throw DomainError("ssh parameters must be finite");
                   if (q.t1 < -kHoppingSlack || q.t2 < -kHoppingSlack)
                     throw DomainError("ssh hoppings must be >= 0 (t1=" + std::to_string(q.t1) +
                                       ", t2=" + std::to_string(q.t2) + ")");
                 },
             },
             p);
}

std::vector<std::string_view> parameter_names(ModelKind kind) {
  switch (kind) {
    case ModelKind::three_spin: return {"h", "j3"};
    case ModelKind::xy: return {"h", "gamma"};
    case ModelKind::ssh: return {"t1", "t2"};
  }
  return {};
}

double get_parameter(const ModelParams& p, std::string_view name) {
  return std::visit(overloaded{
                        [&](const ThreeSpinParams& q) {
                          if (name == "h") return q.h;
                          if (name == "j3") return q.j3;
                          unknown_parameter(ModelKind::three_spin, name);
                        },
                        [&](const XYParams& q) {
                          if (name == "h") return q.h;
                          if (name == "gamma") return q.gamma;
                          unknown_parameter(ModelKind::xy, name);
                        },
                        [&](const SSHParams& q) {
                          if (name == "t1") return q.t1;
                          if (name == "t2") return q.t2;
                          unknown_parameter(ModelKind::ssh, name);
                        },
                    },
                    p);
}

ModelParams with_parameter(ModelParams p, std::string_view name, double value) {
  std::visit(overloaded{
                 [&](ThreeSpinParams& q) {
                   if (name == "h") q.h = value;
                   else if (name == "j3") q.j3 = value;
                   else unknown_parameter(ModelKind::three_spin, name);
                 },
                 [&](XYParams& q) {
                   if (name == "h") q.h = value;
                   else if (name == "gamma") q.gamma = value;
                   else unknown_parameter(ModelKind::xy, name);
                 },
                 [&](SSHParams& q) {
                   if (name == "t1") q.t1 = value;
                   else if (name == "t2") q.t2 = value;
                   else unknown_parameter(ModelKind::ssh, name);
                 },
             },
             p);
  return p;
}

ModelParams default_params(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::three_spin: return ThreeSpinParams{};
    case ModelKind::xy: return XYParams{};
    case ModelKind::ssh: return SSHParams{};
  }
  return ThreeSpinParams{};
}

std::vector<CriticalLine> critical_lines(ModelKind kind) {
  std::vector<CriticalLine> lines;
  switch (kind) {
    case ModelKind::three_spin: {
      auto get = [](const ModelParams& p) { return std::get<ThreeSpinParams>(p); };
      lines.push_back({"h = J3 + 1", [get](const ModelParams& p, double tol) {
                         if (kind_of(p) != ModelKind::three_spin) return false;
                         const auto q = get(p);
                         return std::abs(q.h - (q.j3 + 1.0)) <= tol;
                       }});
      lines.push_back({"h = J3 - 1", [get](const ModelParams& p, double tol) {
                         if (kind_of(p) != ModelKind::three_spin) return false;
                         const auto q = get(p);
                         return std::abs(q.h - (q.j3 - 1.0)) <= tol;
                       }});
      // The interior gap minimum cos k0 = 1/(2 J3) only exists for J3 > 1/2.
      lines.push_back({"h = -J3 (J3 > 1/2)", [get](const ModelParams& p, double tol) {
                         if (kind_of(p) != ModelKind::three_spin) return false;
                         const auto q = get(p);
                         return q.j3 > 0.5 && std::abs(q.h + q.j3) <= tol;
                       }});
      break;
    }
    case ModelKind::xy: {
      auto get = [](const ModelParams& p) { return std::get<XYParams>(p); };
      lines.push_back({"h = +1", [get](const ModelParams& p, double tol) {
                         return kind_of(p) == ModelKind::xy && std::abs(get(p).h - 1.0) <= tol;
                       }});
      lines.push_back({"h = -1", [get](const ModelParams& p, double tol) {
                         return kind_of(p) == ModelKind::xy && std::abs(get(p).h + 1.0) <= tol;
                       }});
      lines.push_back({"gamma = 0 (|h| < 1)", [get](const ModelParams& p, double tol) {
                         if (kind_of(p) != ModelKind::xy) return false;
                         const auto q = get(p);
                         return std::abs(q.gamma) <= tol && std::abs(q.h) < 1.0;
                       }});
      break;
    }
    case ModelKind::ssh: {
      lines.push_back({"t1 = t2", [](const ModelParams& p, double tol) {
                         if (kind_of(p) != ModelKind::ssh) return false;
                         const auto q = std::get<SSHParams>(p);
                         return std::abs(q.t1 - q.t2) <= tol;
                       }});
      break;
    }
  }
  return lines;
}

bool on_critical_line(const ModelParams& p, double tol) {
  for (const auto& line : critical_lines(kind_of(p)))
    if (line.contains(p, tol)) return true;
  return false;
}

ModelParams driven_params(const ModelParams& base, double delta, double omega, double t) {
  if (!(omega > 0.0)) throw DomainError("drive frequency must be > 0");
  const double v = delta * std::cos(omega * t);
  ModelParams out = std::visit(overloaded{
                                   [v](ThreeSpinParams q) -> ModelParams {
                                     q.h += v;
                                     return q;
                                   },
                                   [v](XYParams q) -> ModelParams {
                                     q.h += v;
                                     return q;
                                   },
                                   [v](SSHParams q) -> ModelParams {
                                     q.t1 -= v;
                                     q.t2 += v;
                                     return q;
                                   },
                               },
                               base);
  if (kind_of(out) == ModelKind::ssh) {
    const auto q = std::get<SSHParams>(out);
    if (q.t1 < -kHoppingSlack || q.t2 < -kHoppingSlack)
      throw DomainError("drive makes an SSH hopping negative (t1=" + std::to_string(q.t1) +
                        ", t2=" + std::to_string(q.t2) + ")");
  }
  return out;
}

}  // namespace spreadcx
