#include "steklov/report.hpp"

#include <cstdio>
#include <sstream>

namespace steklov {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string attaining_label(const RectSpectrum& spec) {
  return rect_class_name(spec.eigenspace.front());
}

std::string attaining_label(const BoxSpectrum& spec) {
  return family_label(spec.candidates[spec.eigenspace.front()]);
}

}  // namespace

std::string fmt_human(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

std::string fmt_machine(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json output_record(const std::string& command,
                             nlohmann::json inputs, nlohmann::json results,
                             nlohmann::json diagnostics) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"diagnostics", std::move(diagnostics)}};
}

nlohmann::json rect_results(const RectSpectrum& spec) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : spec.candidates) {
    candidates.push_back({{"family", rect_class_name(c.cls.tag)},
                          {"nu", c.nu},
                          {"sigma", c.sigma},
                          {"residual", c.residual}});
  }
  nlohmann::json eigenspace = nlohmann::json::array();
  for (auto tag : spec.eigenspace) eigenspace.push_back(rect_class_name(tag));
  return {{"sigma1", spec.sigma1},
          {"invariant", spec.invariant},
          {"eigenspace", eigenspace},
          {"multiplicity", spec.eigenspace.size()},
          {"candidates", candidates}};
}

nlohmann::json box_results(const BoxSpectrum& spec) {
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : spec.candidates) {
    candidates.push_back({{"family", family_label(c)},
                          {"signature", family_signature(c)},
                          {"lambda1", c.lambda1},
                          {"lambda2", c.lambda2},
                          {"mu", c.mu},
                          {"sigma", c.sigma},
                          {"residuals", c.residuals}});
  }
  nlohmann::json eigenspace = nlohmann::json::array();
  for (auto i : spec.eigenspace) {
    eigenspace.push_back(family_label(spec.candidates[i]));
  }
  return {{"sigma1", spec.sigma1},
          {"invariant", spec.invariant},
          {"eigenspace", eigenspace},
          {"multiplicity", spec.eigenspace.size()},
          {"candidates", candidates}};
}

nlohmann::json box_diagnostics(const BoxSpectrum& spec) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : spec.diagnostics) {
    out.push_back({{"family", d.family}, {"note", d.note}});
  }
  return out;
}

nlohmann::json rect_sweep_results(const std::vector<RectSweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = {{"a", row.a}};
    if (row.spectrum) {
      const auto& s = *row.spectrum;
      r["sigma1"] = s.sigma1;
      r["invariant"] = s.invariant;
      r["attaining_family"] = attaining_label(s);
      for (const auto& c : s.candidates) {
        r["sigma_" + rect_class_name(c.cls.tag)] = c.sigma;
      }
      r["diagnostics"] = "";
    } else {
      r["diagnostics"] = row.error;
    }
    out.push_back(std::move(r));
  }
  return {{"rows", out}};
}

nlohmann::json box_sweep_results(const std::vector<BoxSweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = {{"a", row.a}, {"b", row.b}};
    if (row.spectrum) {
      const auto& s = *row.spectrum;
      r["sigma1"] = s.sigma1;
      r["invariant"] = s.invariant;
      r["attaining_family"] = attaining_label(s);
      r["diagnostics"] = "";
    } else {
      r["diagnostics"] = row.error;
    }
    out.push_back(std::move(r));
  }
  return {{"rows", out}};
}

std::string rect_csv(const RectSpectrum& spec) {
  std::string out = "family,nu,sigma,residual,attains_sigma1\n";
  const double tol = kDefaultMultTol * std::max(1.0, spec.sigma1);
  for (const auto& c : spec.candidates) {
    const bool attains = std::abs(c.sigma - spec.sigma1) <= tol;
    out += rect_class_name(c.cls.tag) + "," + fmt_machine(c.nu) + "," +
           fmt_machine(c.sigma) + "," + fmt_machine(c.residual) + "," +
           (attains ? "1" : "0") + "\n";
  }
  out += "sigma1,," + fmt_machine(spec.sigma1) + ",,\n";
  out += "invariant,," + fmt_machine(spec.invariant) + ",,\n";
  return out;
}

std::string box_csv(const BoxSpectrum& spec) {
  std::string out = "family,lambda1,lambda2,mu,sigma,attains_sigma1\n";
  const double tol = kDefaultMultTol * std::max(1.0, spec.sigma1);
  for (const auto& c : spec.candidates) {
    const bool attains = std::abs(c.sigma - spec.sigma1) <= tol;
    out += csv_field(family_label(c)) + "," + fmt_machine(c.lambda1) + "," +
           fmt_machine(c.lambda2) + "," + fmt_machine(c.mu) + "," +
           fmt_machine(c.sigma) + "," + (attains ? "1" : "0") + "\n";
  }
  out += "sigma1,,,," + fmt_machine(spec.sigma1) + ",\n";
  out += "invariant,,,," + fmt_machine(spec.invariant) + ",\n";
  return out;
}

std::string rect_sweep_csv(const std::vector<RectSweepRow>& rows) {
  std::string out =
      "a,sigma1,invariant,attaining_family,sigma_I_i,sigma_I_ii,sigma_II_i,"
      "sigma_II_ii,sigma_III_i,sigma_III_ii,sigma_IV_i,sigma_IV_ii,sigma_XY,"
      "diagnostics\n";
  for (const auto& row : rows) {
    out += fmt_machine(row.a);
    if (row.spectrum) {
      const auto& s = *row.spectrum;
      out += "," + fmt_machine(s.sigma1) + "," + fmt_machine(s.invariant) +
             "," + attaining_label(s);
      std::string xy;
      std::string per_class;
      for (const auto& c : s.candidates) {
        if (c.cls.tag == RectClassTag::XY) {
          xy = fmt_machine(c.sigma);
        } else {
          per_class += "," + fmt_machine(c.sigma);
        }
      }
      out += per_class + "," + xy + ",";
    } else {
      out += ",,,,,,,,,,,,," + csv_field(row.error);
    }
    out += "\n";
  }
  return out;
}

std::string box_sweep_csv(const std::vector<BoxSweepRow>& rows) {
  std::string out = "a,b,sigma1,invariant,attaining_family,diagnostics\n";
  for (const auto& row : rows) {
    out += fmt_machine(row.a) + "," + fmt_machine(row.b);
    if (row.spectrum) {
      const auto& s = *row.spectrum;
      out += "," + fmt_machine(s.sigma1) + "," + fmt_machine(s.invariant) +
             "," + csv_field(attaining_label(s)) + ",";
    } else {
      out += ",,,," + csv_field(row.error);
    }
    out += "\n";
  }
  return out;
}

std::string rect_human(const RectSpectrum& spec, double a) {
  std::ostringstream os;
  os << "rectangle [-1,1] x [-" << fmt_human(a) << "," << fmt_human(a)
     << "]\n";
  os << "  family   nu         sigma\n";
  for (const auto& c : spec.candidates) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-8s %-10s %-10s\n",
                  rect_class_name(c.cls.tag).c_str(),
                  fmt_human(c.nu).c_str(), fmt_human(c.sigma).c_str());
    os << line;
  }
  os << "sigma1     " << fmt_human(spec.sigma1) << "\n";
  os << "eigenspace";
  for (auto tag : spec.eigenspace) os << " " << rect_class_name(tag);
  os << "\n";
  os << "invariant  " << fmt_human(spec.invariant)
     << "  (4 * sigma1 * (1 + a))\n";
  return os.str();
}

std::string box_human(const BoxSpectrum& spec, const BoxDomain& dims) {
  std::ostringstream os;
  os << "box [-" << fmt_human(dims.a) << "," << fmt_human(dims.a) << "] x [-"
     << fmt_human(dims.b) << "," << fmt_human(dims.b) << "] x [-"
     << fmt_human(dims.c) << "," << fmt_human(dims.c) << "]\n";
  os << "  lambda1    lambda2    mu         sigma      family\n";
  for (const auto& c : spec.candidates) {
    char line[256];
    std::snprintf(line, sizeof line, "  %-10s %-10s %-10s %-10s %s\n",
                  fmt_human(c.lambda1).c_str(), fmt_human(c.lambda2).c_str(),
                  fmt_human(c.mu).c_str(), fmt_human(c.sigma).c_str(),
                  family_label(c).c_str());
    os << line;
  }
  os << "sigma1       " << fmt_human(spec.sigma1) << "  (multiplicity "
     << spec.eigenspace.size() << ")\n";
  for (auto i : spec.eigenspace) {
    os << "  attained by " << family_label(spec.candidates[i]) << "\n";
  }
  os << "invariant    " << fmt_human(spec.invariant)
     << "  (sigma1 * sqrt(surface area))\n";
  if (!spec.diagnostics.empty()) {
    os << "diagnostics\n";
    for (const auto& d : spec.diagnostics) {
      os << "  " << d.family << ": " << d.note << "\n";
    }
  }
  return os.str();
}

std::string rect_sweep_human(const std::vector<RectSweepRow>& rows) {
  std::ostringstream os;
  os << "  a          sigma1     invariant  attained_by\n";
  for (const auto& row : rows) {
    if (row.spectrum) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-10s %-10s %-10s %s\n",
                    fmt_human(row.a).c_str(),
                    fmt_human(row.spectrum->sigma1).c_str(),
                    fmt_human(row.spectrum->invariant).c_str(),
                    attaining_label(*row.spectrum).c_str());
      os << line;
    } else {
      os << "  " << fmt_human(row.a) << "  failed: " << row.error << "\n";
    }
  }
  return os.str();
}

std::string box_sweep_human(const std::vector<BoxSweepRow>& rows) {
  std::ostringstream os;
  os << "  a          b          sigma1     invariant  attained_by\n";
  for (const auto& row : rows) {
    if (row.spectrum) {
      char line[224];
      std::snprintf(line, sizeof line, "  %-10s %-10s %-10s %-10s %s\n",
                    fmt_human(row.a).c_str(), fmt_human(row.b).c_str(),
                    fmt_human(row.spectrum->sigma1).c_str(),
                    fmt_human(row.spectrum->invariant).c_str(),
                    attaining_label(*row.spectrum).c_str());
      os << line;
    } else {
      os << "  " << fmt_human(row.a) << " " << fmt_human(row.b)
         << "  failed: " << row.error << "\n";
    }
  }
  return os.str();
}

}  // namespace steklov
