#include "sublat/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sublat/errors.hpp"
#include "sublat/lattice.hpp"

namespace sublat {

using nlohmann::ordered_json;

namespace {

bool wants(const AnalysisRequest& r, Section s) {
  return std::find(r.sections.begin(), r.sections.end(), s) != r.sections.end();
}

ordered_json series_to_json(const SeriesReport& s) {
  return ordered_json{{"terms", s.terms}, {"terminated", s.terminated}};
}

SeriesReport series_from_json(const ordered_json& j, SeriesReport::Kind kind) {
  SeriesReport s;
  s.kind = kind;
  s.terms = j.at("terms").get<std::vector<std::uint64_t>>();
  s.terminated = j.at("terminated").get<bool>();
  return s;
}

ordered_json verdict_to_json(const Verdict& v) {
  return ordered_json{{"criterion", to_string(v.criterion)},
                      {"threshold", v.threshold},
                      {"observed", v.observed},
                      {"implies_solvable", v.implies_solvable},
                      {"boundary", to_string(v.boundary)}};
}

Verdict verdict_from_json(const ordered_json& j) {
  Verdict v;
  v.criterion = criterion_from_string(j.at("criterion").get<std::string>());
  v.threshold = j.at("threshold").get<std::uint64_t>();
  v.observed = j.at("observed").get<std::uint64_t>();
  v.implies_solvable = j.at("implies_solvable").get<bool>();
  v.boundary = identification_from_string(j.at("boundary").get<std::string>());
  return v;
}

std::string cycles_1_based(const std::vector<Point>& images) {
  return Permutation(images).to_cycle_string(1);
}

}  // namespace

std::string to_string(Section s) {
  switch (s) {
    case Section::Lattice: return "lattice";
    case Section::Counts: return "counts";
    case Section::Verdicts: return "verdicts";
    case Section::Series: return "series";
  }
  return "?";
}

Section section_from_string(std::string_view s) {
  if (s == "lattice") return Section::Lattice;
  if (s == "counts") return Section::Counts;
  if (s == "verdicts") return Section::Verdicts;
  if (s == "series") return Section::Series;
  throw ConstraintViolation("unknown section '" + std::string(s) + "'");
}

std::vector<Section> parse_sections(std::string_view list) {
  std::vector<Section> out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = list.substr(0, comma);
    if (!item.empty()) {
      Section s = section_from_string(item);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

void AnalysisRequest::validate() const {
  if (sections.empty()) throw ConstraintViolation("request: at least one section is required");
  if (!bounds.max_elements || !bounds.max_coset_points || !bounds.max_lattice_order)
    throw ConstraintViolation("request: bounds must be positive");
  if (!threads) throw ConstraintViolation("request: thread count must be positive");
  spec.validate();
}

Report analyze(const AnalysisRequest& request) {
  request.validate();
  Report report;
  report.spec = request.spec.to_string();
  PermGroup G = build(request.spec);
  report.order = G.order();

  const bool need_lattice =
      wants(request, Section::Lattice) || wants(request, Section::Counts) || wants(request, Section::Verdicts);
  if (need_lattice) {
    SubgroupLattice lattice(G, request.bounds);
    const auto profiles = class_profiles(lattice, request.threads, request.bounds);
    CountsReport counts = sublat::counts(lattice, profiles, request.bounds);
    if (counts.total_subgroups != lattice.total_subgroups() ||
        counts.supersolvable_count + counts.non_supersolvable_count != counts.total_subgroups ||
        counts.nilpotent_count + counts.non_nilpotent_count != counts.total_subgroups)
      throw InvariantViolation("counts do not add up to the lattice total");

    if (wants(request, Section::Lattice)) {
      LatticeSection section;
      section.class_count = lattice.classes().size();
      section.total_subgroups = lattice.total_subgroups();
      for (std::size_t i = 0; i < lattice.classes().size(); ++i) {
        const auto& cls = lattice.classes()[i];
        ClassSummary summary;
        summary.order = cls.order;
        summary.class_size = cls.members.size();
        summary.normalizer_order = G.order() / summary.class_size;
        summary.supersolvable = profiles[i].supersolvable;
        summary.nilpotent = profiles[i].nilpotent;
        for (std::uint32_t x : cls.generators) {
          auto images = lattice.table().element(x).images();
          summary.generators.emplace_back(images.begin(), images.end());
        }
        section.classes.push_back(std::move(summary));
      }
      report.lattice = std::move(section);
    }
    if (wants(request, Section::Verdicts)) report.verdicts = counts.verdicts;
    if (wants(request, Section::Counts)) {
      counts.verdicts.clear();
      report.counts = std::move(counts);
    }
  }
  if (wants(request, Section::Series))
    report.series = SeriesSection{derived_series(G), upper_central_series(G, request.bounds)};
  return report;
}

ordered_json to_json(const Report& report) {
  ordered_json j;
  j["spec"] = report.spec;
  j["order"] = report.order;
  j["point_base"] = report.point_base;
  if (report.lattice) {
    ordered_json classes = ordered_json::array();
    for (const auto& c : report.lattice->classes)
      classes.push_back(ordered_json{{"order", c.order},
                                     {"class_size", c.class_size},
                                     {"normalizer_order", c.normalizer_order},
                                     {"supersolvable", c.supersolvable},
                                     {"nilpotent", c.nilpotent},
                                     {"generators", c.generators}});
    j["lattice"] = ordered_json{{"class_count", report.lattice->class_count},
                                {"total", report.lattice->total_subgroups},
                                {"classes", std::move(classes)}};
  }
  if (report.counts) {
    const auto& c = *report.counts;
    j["counts"] = ordered_json{{"total", c.total_subgroups},
                               {"supersolvable", c.supersolvable_count},
                               {"non_supersolvable", c.non_supersolvable_count},
                               {"nilpotent", c.nilpotent_count},
                               {"non_nilpotent", c.non_nilpotent_count},
                               {"solvable", c.is_solvable_direct},
                               {"identification", to_string(c.identification)}};
  }
  if (report.verdicts) {
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : *report.verdicts) verdicts.push_back(verdict_to_json(v));
    j["verdicts"] = std::move(verdicts);
  }
  if (report.series)
    j["series"] = ordered_json{{"derived", series_to_json(report.series->derived)},
                               {"upper_central", series_to_json(report.series->upper_central)}};
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<std::uint64_t>();
  r.point_base = j.at("point_base").get<std::uint32_t>();
  if (j.contains("lattice")) {
    const auto& l = j.at("lattice");
    LatticeSection section;
    section.class_count = l.at("class_count").get<std::uint64_t>();
    section.total_subgroups = l.at("total").get<std::uint64_t>();
    for (const auto& c : l.at("classes")) {
      ClassSummary s;
      s.order = c.at("order").get<std::uint64_t>();
      s.class_size = c.at("class_size").get<std::uint64_t>();
      s.normalizer_order = c.at("normalizer_order").get<std::uint64_t>();
      s.supersolvable = c.at("supersolvable").get<bool>();
      s.nilpotent = c.at("nilpotent").get<bool>();
      s.generators = c.at("generators").get<std::vector<std::vector<Point>>>();
      section.classes.push_back(std::move(s));
    }
    r.lattice = std::move(section);
  }
  if (j.contains("counts")) {
    const auto& c = j.at("counts");
    CountsReport counts;
    counts.total_subgroups = c.at("total").get<std::uint64_t>();
    counts.supersolvable_count = c.at("supersolvable").get<std::uint64_t>();
    counts.non_supersolvable_count = c.at("non_supersolvable").get<std::uint64_t>();
    counts.nilpotent_count = c.at("nilpotent").get<std::uint64_t>();
    counts.non_nilpotent_count = c.at("non_nilpotent").get<std::uint64_t>();
    counts.is_solvable_direct = c.at("solvable").get<bool>();
    counts.identification = identification_from_string(c.at("identification").get<std::string>());
    r.counts = std::move(counts);
  }
  if (j.contains("verdicts")) {
    std::vector<Verdict> verdicts;
    for (const auto& v : j.at("verdicts")) verdicts.push_back(verdict_from_json(v));
    r.verdicts = std::move(verdicts);
  }
  if (j.contains("series")) {
    const auto& s = j.at("series");
    r.series = SeriesSection{series_from_json(s.at("derived"), SeriesReport::Kind::Derived),
                             series_from_json(s.at("upper_central"), SeriesReport::Kind::UpperCentral)};
  }
  return r;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "gap> G := " << report.spec << ";;   # order " << report.order << "\n";
  if (report.lattice) {
    const auto& l = *report.lattice;
    out << "gap> LatticeSubgroups(G);\n"
        << "<subgroup lattice of " << report.spec << ", " << l.class_count << " classes, "
        << l.total_subgroups << " subgroups>\n";
    out << "gap> C := ConjugacyClassesSubgroups(G);;\n";
    out << std::setw(6) << "class" << std::setw(8) << "order" << std::setw(7) << "size"
        << std::setw(12) << "normalizer" << std::setw(5) << "ss" << std::setw(6) << "nilp"
        << "  generators\n";
    for (std::size_t i = 0; i < l.classes.size(); ++i) {
      const auto& c = l.classes[i];
      out << std::setw(6) << i + 1 << std::setw(8) << c.order << std::setw(7) << c.class_size
          << std::setw(12) << c.normalizer_order << std::setw(5) << (c.supersolvable ? "y" : "n")
          << std::setw(6) << (c.nilpotent ? "y" : "n") << "  ";
      if (c.generators.empty()) out << "()";
      for (std::size_t g = 0; g < c.generators.size(); ++g)
        out << (g ? ", " : "") << cycles_1_based(c.generators[g]);
      out << "\n";
    }
  }
  if (report.counts) {
    const auto& c = *report.counts;
    out << "gap> Sum(List(C, Size));\n" << c.total_subgroups << "\n";
    out << "gap> Sum(List(Filtered(C, t -> IsSupersolvable(Representative(t))), Size));\n"
        << c.supersolvable_count << "\n";
    out << "gap> Sum(List(Filtered(C, t -> not IsSupersolvable(Representative(t))), Size));\n"
        << c.non_supersolvable_count << "\n";
    out << "gap> Sum(List(Filtered(C, t -> not IsNilpotent(Representative(t))), Size));\n"
        << c.non_nilpotent_count << "\n";
    out << "# nilpotent: " << c.nilpotent_count << ", solvable: " << (c.is_solvable_direct ? "true" : "false")
        << ", identification: " << to_string(c.identification) << "\n";
  }
  if (report.verdicts) {
    for (const auto& v : *report.verdicts)
      out << "# verdict " << to_string(v.criterion) << ": observed " << v.observed << " vs threshold "
          << v.threshold << " -> " << (v.implies_solvable ? "implies solvable" : "no claim")
          << ", boundary " << to_string(v.boundary) << "\n";
  }
  if (report.series) {
    auto terms = [](const SeriesReport& s) {
      std::string t = "[";
      for (std::size_t i = 0; i < s.terms.size(); ++i) t += (i ? ", " : "") + std::to_string(s.terms[i]);
      return t + "]";
    };
    out << "# derived series orders: " << terms(report.series->derived)
        << (report.series->derived.terminated ? " (reaches 1)" : " (stable above 1)") << "\n";
    out << "# upper central series orders: " << terms(report.series->upper_central)
        << (report.series->upper_central.terminated ? " (reaches G)" : " (stable below G)") << "\n";
  }
  return out.str();
}

std::string serialize(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Text) return render_text(report);
  return to_json(report).dump(2) + "\n";
}

}  // namespace sublat
