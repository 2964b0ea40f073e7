// tsurg: exact invariants and classifications for torus surgery on tori in
// the 4-sphere, with JSON output for scripting and golden-file testing.
//
// Exit codes: 0 on success, 1 on a domain error (the JSON carries the error
// code), 2 on malformed input or usage errors.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli_io.hpp"
#include "tsurg/errors.hpp"
#include "tsurg/invariants.hpp"
#include "tsurg/surgery.hpp"
#include "tsurg/threemflds.hpp"
#include "tsurg/unknotted.hpp"

namespace {

using tsurg::cli::json;

struct Outcome {
  json payload;
  std::vector<std::string> citations;
};

void print_document(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_ok(const Outcome& outcome) {
  print_document(json{{"status", "ok"},
                      {"payload", outcome.payload},
                      {"citations", outcome.citations}});
}

void print_error(const std::string& code, const std::string& message) {
  print_document(json{{"status", "error"},
                      {"error", json{{"code", code}, {"message", message}}},
                      {"citations", json::array()}});
}

struct DescriptorFlags {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "multiplicity (meridian coefficient)")->required();
    cmd->add_option("--a", a, "alpha coefficient")->required();
    cmd->add_option("--b", b, "beta coefficient")->required();
  }

  tsurg::SurgeryDescriptor descriptor() const { return {p, a, b}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tsurg: torus surgery on tori in the 4-sphere -- homology, spin, "
               "fundamental groups, classifications, and 3-manifold embeddings"};
  app.require_subcommand(1);

  std::optional<Outcome> outcome;
  auto finish = [&outcome](json payload, std::vector<std::string> citations) {
    outcome = Outcome{std::move(payload), std::move(citations)};
  };

  // normalize
  auto* normalize_cmd = app.add_subcommand(
      "normalize", "Multiplicity, auxiliary multiplicity, and direction of a surgery");
  auto normalize_flags = std::make_shared<DescriptorFlags>();
  normalize_flags->attach(normalize_cmd);
  normalize_cmd->callback([&, normalize_flags] {
    tsurg::NormalizedSurgery n = tsurg::normalize(normalize_flags->descriptor());
    json payload{{"multiplicity", n.multiplicity}, {"auxiliary", n.auxiliary}};
    payload["direction"] =
        n.direction ? json{n.direction->a, n.direction->b} : json(nullptr);
    finish(std::move(payload), {"multiplicity_auxiliary_direction"});
  });

  // gluing-matrix
  auto* gluing_cmd =
      app.add_subcommand("gluing-matrix", "A unimodular gluing matrix realizing a surgery");
  auto gluing_flags = std::make_shared<DescriptorFlags>();
  gluing_flags->attach(gluing_cmd);
  gluing_cmd->callback([&, gluing_flags] {
    tsurg::IntMatrix m = tsurg::gluing_matrix(gluing_flags->descriptor());
    finish(json{{"matrix", tsurg::cli::to_json(m)}}, {"gluing_matrix_last_column"});
  });

  // homology
  auto* homology_cmd =
      app.add_subcommand("homology", "Integral homology of the surgered 4-sphere");
  auto homology_flags = std::make_shared<DescriptorFlags>();
  homology_flags->attach(homology_cmd);
  homology_cmd->callback([&, homology_flags] {
    auto h = tsurg::surgery_homology(homology_flags->descriptor());
    finish(tsurg::cli::to_json(h), {"torus_surgery_homology"});
  });

  // spin
  auto* spin_cmd = app.add_subcommand("spin", "Whether the surgered manifold is spin");
  auto spin_flags = std::make_shared<DescriptorFlags>();
  spin_flags->attach(spin_cmd);
  auto q_alpha = std::make_shared<int>(0);
  auto q_beta = std::make_shared<int>(0);
  auto spin_label = std::make_shared<std::string>("torus");
  spin_cmd->add_option("--q-alpha", *q_alpha, "Rokhlin form on the alpha pushoff")
      ->check(CLI::Range(0, 1));
  spin_cmd->add_option("--q-beta", *q_beta, "Rokhlin form on the beta pushoff")
      ->check(CLI::Range(0, 1));
  spin_cmd->add_option("--label", *spin_label, "label for the torus");
  spin_cmd->callback([&, spin_flags, q_alpha, q_beta, spin_label] {
    tsurg::FramedTorus t =
        tsurg::make_framed_torus(*spin_label, *q_alpha, *q_beta, std::nullopt);
    const bool spin = tsurg::is_spin(t, spin_flags->descriptor());
    json payload{{"profile", json{*q_alpha, *q_beta}}, {"spin", spin}};
    std::vector<std::string> citations =
        (spin_flags->p & 1)
            ? std::vector<std::string>{"odd_multiplicity_unique_spin_structure"}
            : std::vector<std::string>{"iwase_spin_criterion", "rokhlin_quadratic_form"};
    finish(std::move(payload), std::move(citations));
  });

  // pi1
  auto* pi1_cmd = app.add_subcommand(
      "pi1", "Fundamental-group presentation of the surgered manifold");
  auto pi1_path = std::make_shared<std::string>();
  pi1_cmd->add_option("--json", *pi1_path, "descriptor plus exterior presentation")
      ->required()
      ->check(CLI::ExistingFile);
  pi1_cmd->callback([&, pi1_path] {
    json in = tsurg::cli::read_json_file(*pi1_path);
    tsurg::SurgeryDescriptor d{tsurg::cli::int_field(in, "p"),
                               tsurg::cli::int_field(in, "a"),
                               tsurg::cli::int_field(in, "b")};
    std::optional<tsurg::ExteriorPresentation> exterior;
    if (in.contains("exterior")) exterior = tsurg::cli::parse_exterior(in.at("exterior"));
    std::string label = in.contains("label") && in.at("label").is_string()
                            ? in.at("label").get<std::string>()
                            : "torus";
    tsurg::FramedTorus t = tsurg::make_framed_torus(
        label, static_cast<int>(tsurg::cli::int_field_or(in, "q_alpha", 0)),
        static_cast<int>(tsurg::cli::int_field_or(in, "q_beta", 0)), std::move(exterior));
    tsurg::GroupPresentation g = tsurg::pi1_of_surgery(t, d);
    json relators = json::array();
    for (const tsurg::Word& w : g.relators)
      relators.push_back(tsurg::cli::format_word(w, g.generators));
    json payload{{"generators", g.generators}, {"relators", std::move(relators)}};
    finish(std::move(payload), {"attaching_circle_relation"});
  });

  // abelianize
  auto* abelianize_cmd =
      app.add_subcommand("abelianize", "Abelianization of a finite presentation");
  auto abelianize_path = std::make_shared<std::string>();
  abelianize_cmd->add_option("--json", *abelianize_path, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  abelianize_cmd->callback([&, abelianize_path] {
    auto g = tsurg::cli::parse_presentation(tsurg::cli::read_json_file(*abelianize_path));
    tsurg::AbelianGroup ab = tsurg::abelianization(g);
    finish(json{{"abelianization", tsurg::cli::to_json(ab)}}, {"smith_normal_form"});
  });

  // deficiency
  auto* deficiency_cmd =
      app.add_subcommand("deficiency", "Deficiency of a finite presentation");
  auto deficiency_path = std::make_shared<std::string>();
  deficiency_cmd->add_option("--json", *deficiency_path, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  deficiency_cmd->callback([&, deficiency_path] {
    auto g = tsurg::cli::parse_presentation(tsurg::cli::read_json_file(*deficiency_path));
    finish(json{{"deficiency", tsurg::deficiency(g)}}, {"presentation_deficiency"});
  });

  // classify-unknotted
  auto* unknotted_cmd = app.add_subcommand(
      "classify-unknotted", "Diffeomorphism type of a surgery on the unknotted torus");
  auto unknotted_flags = std::make_shared<DescriptorFlags>();
  unknotted_flags->attach(unknotted_cmd);
  unknotted_cmd->callback([&, unknotted_flags] {
    tsurg::ManifoldName name =
        tsurg::classify_unknotted_surgery(unknotted_flags->descriptor());
    json payload{{"manifold", std::string(tsurg::manifold_tag(name))}};
    std::vector<std::string> citations;
    if (name == tsurg::ManifoldName::S4) {
      citations = {"montesinos_multiplicity_one"};
    } else if (name == tsurg::ManifoldName::Unclassified) {
      payload["note"] = "multiplicity >= 2 surgeries on the unknotted torus are "
                        "classified by Iwase; not implemented here";
      citations = {"iwase_unknotted_torus_surgeries"};
    } else {
      citations = {"pao_iwase_multiplicity_zero"};
    }
    finish(std::move(payload), std::move(citations));
  });

  // classify-twisted-spun
  auto* twisted_cmd = app.add_subcommand(
      "classify-twisted-spun", "Diffeomorphism type of a surgery on a twisted spun torus");
  auto twisted_flags = std::make_shared<DescriptorFlags>();
  twisted_flags->attach(twisted_cmd);
  twisted_cmd->callback([&, twisted_flags] {
    tsurg::ManifoldName name =
        tsurg::classify_twisted_spun_surgery(twisted_flags->descriptor());
    json payload{{"manifold", std::string(tsurg::manifold_tag(name))}};
    std::vector<std::string> citations;
    if (name == tsurg::ManifoldName::S4) {
      citations = {"twisted_spun_fishtail_surgery"};
    } else {
      payload["note"] =
          "only (p, a) = (1, 0) surgeries on twisted spun tori are classified here";
    }
    finish(std::move(payload), std::move(citations));
  });

  // even-matrix
  auto* even_cmd = app.add_subcommand(
      "even-matrix", "Even unimodular matrix carrying the designated vector to (a, b)");
  auto even_a = std::make_shared<std::int64_t>(0);
  auto even_b = std::make_shared<std::int64_t>(0);
  even_cmd->add_option("--a", *even_a, "first coordinate")->required();
  even_cmd->add_option("--b", *even_b, "second coordinate")->required();
  even_cmd->callback([&, even_a, even_b] {
    tsurg::IntMatrix m = tsurg::even_matrix_for_direction(*even_a, *even_b);
    const bool odd = (*even_a & 1) && (*even_b & 1);
    json payload{{"designated_vector", odd ? json{1, 1} : json{1, 0}},
                 {"matrix", tsurg::cli::to_json(m)}};
    finish(std::move(payload), {"even_gluing_change_of_direction"});
  });

  // montesinos-extends
  auto* montesinos_cmd = app.add_subcommand(
      "montesinos-extends", "Whether a gluing matrix extends over the standard twin");
  auto montesinos_path = std::make_shared<std::string>();
  montesinos_cmd->add_option("--json", *montesinos_path, "file with a \"matrix\" field")
      ->required()
      ->check(CLI::ExistingFile);
  montesinos_cmd->callback([&, montesinos_path] {
    json in = tsurg::cli::read_json_file(*montesinos_path);
    if (!in.is_object() || !in.contains("matrix"))
      throw tsurg::cli::InputError("expected an object with a \"matrix\" field");
    tsurg::IntMatrix m = tsurg::cli::parse_matrix(in.at("matrix"));
    const bool extends = tsurg::montesinos_extends(m);
    finish(json{{"extends", extends}}, {"montesinos_extension_criterion"});
  });

  // dehn-h1
  auto* dehn_cmd =
      app.add_subcommand("dehn-h1", "First homology of a Dehn surgery on a link");
  auto dehn_path = std::make_shared<std::string>();
  dehn_cmd->add_option("--json", *dehn_path, "link file")->required()->check(CLI::ExistingFile);
  dehn_cmd->callback([&, dehn_path] {
    auto l = tsurg::cli::parse_link(tsurg::cli::read_json_file(*dehn_path));
    tsurg::AbelianGroup h1 = tsurg::dehn_h1(l);
    finish(json{{"h1", tsurg::cli::to_json(h1)}}, {"dehn_surgery_presentation_matrix"});
  });

  // homology-sphere
  auto* sphere_cmd = app.add_subcommand(
      "homology-sphere", "Whether a Dehn surgery yields an integral homology sphere");
  auto sphere_path = std::make_shared<std::string>();
  sphere_cmd->add_option("--json", *sphere_path, "link file")->required()->check(CLI::ExistingFile);
  sphere_cmd->callback([&, sphere_path] {
    auto l = tsurg::cli::parse_link(tsurg::cli::read_json_file(*sphere_path));
    const bool sphere = tsurg::is_integral_homology_sphere(l);
    finish(json{{"integral_homology_sphere", sphere}}, {"unit_determinant_criterion"});
  });

  // embed-target
  auto* embed_cmd = app.add_subcommand(
      "embed-target", "Embedding targets for p/q surgery on a knot");
  auto embed_p = std::make_shared<std::int64_t>(0);
  auto embed_q = std::make_shared<std::int64_t>(0);
  embed_cmd->add_option("--p", *embed_p, "surgery coefficient numerator")->required();
  embed_cmd->add_option("--q", *embed_q, "surgery coefficient denominator")->required();
  embed_cmd->callback([&, embed_p, embed_q] {
    finish(tsurg::cli::to_json(tsurg::embedding_target(*embed_p, *embed_q)),
           {"dehn_surgery_embedding_parity"});
  });

  // ribbon-certificate
  auto* ribbon_cmd = app.add_subcommand(
      "ribbon-certificate", "Embedding certificate for 1/n surgery on a ribbon or slice link");
  auto ribbon_path = std::make_shared<std::string>();
  auto ribbon_kind = std::make_shared<std::string>();
  ribbon_cmd->add_option("--json", *ribbon_path, "link file")->required()->check(CLI::ExistingFile);
  ribbon_cmd->add_option("--kind", *ribbon_kind, "ribbon or slice")
      ->required()
      ->check(CLI::IsMember({"ribbon", "slice"}));
  ribbon_cmd->callback([&, ribbon_path, ribbon_kind] {
    auto l = tsurg::cli::parse_link(tsurg::cli::read_json_file(*ribbon_path));
    auto kind = *ribbon_kind == "ribbon" ? tsurg::LinkKind::Ribbon : tsurg::LinkKind::Slice;
    finish(tsurg::cli::to_json(tsurg::ribbon_embedding_certificate(l, kind)),
           {"gluck_cross_section_embedding"});
  });

  // spin-plan
  auto* spin_plan_cmd = app.add_subcommand(
      "spin-plan", "Torus surgery descriptors realizing the spin of a Dehn surgery");
  auto spin_plan_path = std::make_shared<std::string>();
  spin_plan_cmd->add_option("--json", *spin_plan_path, "link file")
      ->required()
      ->check(CLI::ExistingFile);
  spin_plan_cmd->callback([&, spin_plan_path] {
    auto l = tsurg::cli::parse_link(tsurg::cli::read_json_file(*spin_plan_path));
    json descriptors = json::array();
    for (const auto& d : tsurg::spin_construction_plan(l))
      descriptors.push_back(tsurg::cli::to_json(d));
    finish(json{{"descriptors", std::move(descriptors)}}, {"spin_of_dehn_surgery"});
  });

  // group-plan
  auto* group_plan_cmd = app.add_subcommand(
      "group-plan", "Round-handle surgery plan realizing a group of deficiency >= 0");
  auto group_plan_path = std::make_shared<std::string>();
  group_plan_cmd->add_option("--json", *group_plan_path, "presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  group_plan_cmd->callback([&, group_plan_path] {
    auto g = tsurg::cli::parse_presentation(tsurg::cli::read_json_file(*group_plan_path));
    tsurg::SurgeryPlan plan = tsurg::torus_link_plan_from_group(g);
    json words = json::array();
    for (const tsurg::Word& w : plan.relator_words)
      words.push_back(tsurg::cli::format_word(w, g.generators));
    json descriptors = json::array();
    for (const auto& d : plan.descriptors) descriptors.push_back(tsurg::cli::to_json(d));
    json payload{{"torus_count", plan.torus_count},
                 {"relator_words", std::move(words)},
                 {"descriptors", std::move(descriptors)},
                 {"narrative", plan.narrative}};
    finish(std::move(payload), {"round_handle_group_realization"});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    print_error("UsageError", e.what());
    return 2;
  } catch (const tsurg::DomainError& e) {
    print_error(std::string(tsurg::error_name(e.code())), e.what());
    return 1;
  } catch (const tsurg::cli::InputError& e) {
    print_error("MalformedInput", e.what());
    return 2;
  } catch (const json::exception& e) {
    print_error("MalformedInput", e.what());
    return 2;
  } catch (const std::length_error& e) {
    print_error("MalformedInput", e.what());
    return 2;
  }

  if (!outcome) {
    print_error("UsageError", "no subcommand selected");
    return 2;
  }
  print_ok(*outcome);
  return 0;
}
