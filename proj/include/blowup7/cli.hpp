#pragma once

// Command-line surface: one executable exposing the enumerations, the Cremona
// calculus, the very-ampleness test, the (2,2)-surface analysis, and the
// acceptance suite.  `run_cli` is stream-parameterized so the whole interface
// is exercised in-process by the test suite.
//
// Exit codes: 0 = ok, 1 = a check evaluated to false, 2 = bad input or usage.
// `--json` switches from the human tables to a machine envelope
// {"status": ..., "payload": ..., "elapsed_ms": ...}.

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <blowup7/ampleness.hpp>
#include <blowup7/cremona.hpp>
#include <blowup7/divisor_class.hpp>
#include <blowup7/enumerate.hpp>
#include <blowup7/json_io.hpp>
#include <blowup7/surface22.hpp>
#include <blowup7/verify.hpp>

namespace blowup7::cli {

struct CommandResult {
    std::string status = "ok";  // ok | fail | error
    Json payload;
    long long elapsed_ms = 0;
};

inline Json to_json(const CommandResult& r)
{
    Json j;
    j["status"] = r.status;
    j["payload"] = r.payload;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

namespace detail {

/// Outcome of one subcommand before the envelope is stamped with timing.
struct Rendered {
    std::string status = "ok";
    Json payload;
    std::string human;
};

inline std::vector<int> parse_centers(const std::string& text)
{
    std::vector<int> centers;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ','))
        centers.push_back(std::stoi(token));
    if (centers.size() != 3)
        throw std::invalid_argument("expected three comma-separated centers, got \"" + text + "\"");
    return centers;
}

inline Json classes_json(const std::vector<DivisorClass>& classes)
{
    Json arr = Json::array();
    for (const auto& d : classes)
        arr.push_back(to_json(d));
    return arr;
}

/// Aligned two-column table: class string, then its family label.
inline std::string class_table(const std::vector<DivisorClass>& classes, bool with_family)
{
    std::size_t width = 0;
    for (const auto& d : classes)
        width = std::max(width, to_string(d).size());
    std::ostringstream out;
    for (const auto& d : classes) {
        const std::string text = to_string(d);
        out << text;
        if (with_family)
            out << std::string(width - text.size() + 2, ' ') << to_string(classify(d));
        out << "\n";
    }
    return out.str();
}

inline Rendered handle_enumerate(const std::string& kind, int r, const std::string& polarization)
{
    std::vector<DivisorClass> classes;
    bool with_family = true;
    if (kind == "minus-one") {
        classes = minus_one_classes(r);
    } else if (kind == "minus-two") {
        classes = minus_two_classes(r);
    } else if (kind == "conic-bundle") {
        classes = conic_bundle_classes(r);
    } else if (kind == "degree-two") {
        classes = degree_two_classes(r);
        with_family = false;
    } else {  // lines
        if (polarization.empty())
            throw std::invalid_argument("--kind lines needs --polarization \"a;b1,...,br\"");
        classes = lines_under_polarization(parse_divisor_class(polarization));
    }
    Rendered result;
    result.payload["kind"] = kind;
    result.payload["r"] = r;
    if (!polarization.empty())
        result.payload["polarization"] = to_json(parse_divisor_class(polarization));
    result.payload["count"] = classes.size();
    result.payload["classes"] = classes_json(classes);
    std::ostringstream human;
    human << classes.size() << " classes (kind " << kind << ", r = " << r << ")\n"
          << class_table(classes, with_family);
    result.human = human.str();
    return result;
}

inline Rendered handle_cremona_apply(const std::string& centers_text, const std::string& class_text)
{
    const auto centers = parse_centers(centers_text);
    const CremonaMove move{{centers[0], centers[1], centers[2]}};
    const DivisorClass start = parse_divisor_class(class_text);
    const DivisorClass image = apply(move, start);
    Rendered result;
    result.payload["start"] = to_json(start);
    result.payload["centers"] = centers;
    result.payload["result"] = to_json(image);
    result.payload["display"] = to_string(image);
    result.human = to_string(image) + "\n";
    return result;
}

inline Rendered handle_cremona_reduce(const std::string& class_text,
                                      const std::string& certificate_path)
{
    const DivisorClass start = parse_divisor_class(class_text);
    const ReductionCertificate cert = reduce(start);
    Rendered result;
    result.payload["start"] = to_json(cert.start);
    result.payload["end"] = to_json(cert.end);
    result.payload["display"] = to_string(cert.end);
    result.payload["steps"] = cert.moves.size();
    result.payload["certificate"] = to_json(cert);
    std::ostringstream human;
    human << "reduced: " << to_string(cert.end) << "\n"
          << "steps: " << cert.moves.size() << "\n";
    if (!certificate_path.empty()) {
        std::ofstream file(certificate_path);
        if (!file)
            throw std::runtime_error("cannot write certificate file: " + certificate_path);
        file << to_json(cert).dump(2) << "\n";
        human << "certificate: " << certificate_path << "\n";
    }
    result.human = human.str();
    return result;
}

inline Rendered handle_cremona_catalogue()
{
    auto catalogue = polarization_catalogue(7);
    std::sort(catalogue.begin(), catalogue.end(), enumeration_order);
    Rendered result;
    result.payload["count"] = catalogue.size();
    result.payload["classes"] = classes_json(catalogue);
    std::ostringstream human;
    human << catalogue.size() << " very-ample polarizations\n" << class_table(catalogue, false);
    result.human = human.str();
    return result;
}

inline Json load_json_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot read input file: " + path);
    return Json::parse(file);
}

inline Rendered handle_check_ample(const std::string& class_text, const std::string& config_path,
                                   int search_depth)
{
    const DivisorClass L = parse_divisor_class(class_text);
    PointConfiguration config;
    config.r = L.rank();
    if (!config_path.empty())
        config = configuration_from_json(load_json_file(config_path));
    const AmplenessReport report = is_very_ample(L, config, search_depth);
    Rendered result;
    result.status = report.verdict == AmpleVerdict::VeryAmple ? "ok" : "fail";
    result.payload["class"] = to_json(L);
    result.payload["configuration"] = to_json(config);
    result.payload["report"] = to_json(report);
    std::ostringstream human;
    human << "class: " << to_string(L) << "\n"
          << "verdict: " << to_string(report.verdict) << "\n";
    if (report.verdict == AmpleVerdict::VeryAmple) {
        human << "basis class: " << to_string(report.basis_class) << "\n";
    } else if (report.failed_condition != 0) {
        human << "failed condition: " << report.failed_condition << "\n";
        if (report.witness)
            human << "witness: " << to_string(*report.witness) << "\n";
    }
    if (report.verdict == AmpleVerdict::NotVerified)
        human << "search depth used: " << report.search_depth_used << "\n";
    result.human = human.str();
    return result;
}

inline Rendered handle_analyze_surface(const std::string& input_path, const std::string& report)
{
    const Surface22 surface = surface_from_json(load_json_file(input_path));
    const bool want_all = report == "all";
    Rendered result;
    std::ostringstream human;
    if (want_all || report == "zeros") {
        const CommonZeros zeros = common_zeros(surface);
        result.payload["zeros"] = to_json(zeros);
        if (zeros.shared_component) {
            human << "common zeros: shared component\n";
        } else {
            human << "common zeros: total degree " << zeros.total_degree() << "\n";
            for (const auto& cluster : zeros.clusters)
                human << "  " << to_string(cluster) << "\n";
        }
    }
    if (want_all || report == "lines") {
        const auto lines = minus_two_lines(surface);
        Json block;
        block["count"] = line_count(lines);
        Json entries = Json::array();
        for (const auto& line : lines)
            entries.push_back(to_json(line));
        block["lines"] = entries;
        result.payload["lines"] = block;
        human << "(-2) lines: " << line_count(lines) << "\n";
        for (const auto& line : lines)
            human << "  " << to_string(line) << "\n";
    }
    if (want_all || report == "fibers") {
        const BinaryForm disc = discriminant_sextic(surface);
        const HonestyReport honesty = is_honest_bundle(surface);
        result.payload["discriminant"] = to_json(disc);
        result.payload["honesty"] = to_json(honesty);
        human << "discriminant: " << to_string(disc) << "\n"
              << "honest bundle: " << (honesty.honest ? "yes" : "no") << "\n";
        for (const auto& witness : honesty.witnesses)
            human << "  degenerate fiber at " << to_string(witness) << "\n";
    }
    if (want_all || report == "singular") {
        const auto components = singular_points(surface);
        Json entries = Json::array();
        for (const auto& c : components)
            entries.push_back(to_json(c));
        result.payload["singular"] = entries;
        if (components.empty()) {
            human << "singular locus: none\n";
        } else {
            human << "singular locus: " << components.size() << " component(s)\n";
            for (const auto& c : components)
                human << "  " << to_string(c) << "\n";
        }
    }
    result.human = human.str();
    return result;
}

inline Rendered handle_verify_paper()
{
    const auto results = verify::run_acceptance_suite();
    int passed = 0;
    Json entries = Json::array();
    std::ostringstream human;
    for (const auto& c : results) {
        if (c.pass)
            ++passed;
        Json entry;
        entry["id"] = c.id;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        entries.push_back(entry);
        human << "AC-" << (c.id < 10 ? "0" : "") << c.id << "  " << (c.pass ? "PASS" : "FAIL")
              << "  " << c.name << "\n        " << c.detail << "\n";
    }
    const int failed = static_cast<int>(results.size()) - passed;
    human << passed << "/" << results.size() << " criteria passed\n";
    Rendered result;
    result.status = failed == 0 ? "ok" : "fail";
    result.payload["criteria"] = entries;
    result.payload["passed"] = passed;
    result.payload["failed"] = failed;
    result.human = human.str();
    return result;
}

}  // namespace detail

/// Parses argv, dispatches, and writes either the human table or the JSON
/// envelope to `out`.  Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact divisor-class computations on blown-up planes and smooth (2,2) "
                 "surfaces in P^1 x P^2"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit the machine-readable result envelope");

    std::string kind, polarization;
    int r = 7;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list divisor classes of one kind");
    enumerate_cmd->fallthrough();
    enumerate_cmd
        ->add_option("--kind", kind, "minus-one | minus-two | conic-bundle | degree-two | lines")
        ->required()
        ->check(CLI::IsMember({"minus-one", "minus-two", "conic-bundle", "degree-two", "lines"}));
    enumerate_cmd->add_option("--r", r, "number of blown-up points (default 7)");
    enumerate_cmd->add_option("--polarization", polarization,
                              "polarization class \"a;b1,...,br\" for --kind lines");

    auto* cremona_cmd = app.add_subcommand("cremona", "quadratic moves and reduction");
    cremona_cmd->fallthrough();
    cremona_cmd->require_subcommand(1);
    std::string centers_text, class_text, certificate_path;
    auto* apply_cmd = cremona_cmd->add_subcommand("apply", "apply one quadratic move");
    apply_cmd->fallthrough();
    apply_cmd->add_option("--centers", centers_text, "three centers, e.g. 5,6,7")->required();
    apply_cmd->add_option("--class", class_text, "divisor class \"a;b1,...,br\"")->required();
    auto* reduce_cmd = cremona_cmd->add_subcommand("reduce", "reduce to a minimal representative");
    reduce_cmd->fallthrough();
    reduce_cmd->add_option("--class", class_text, "divisor class \"a;b1,...,br\"")->required();
    reduce_cmd->add_option("--certificate", certificate_path,
                           "write the replayable certificate to this file");
    auto* catalogue_cmd =
        cremona_cmd->add_subcommand("catalogue", "the 126 very-ample polarizations");
    catalogue_cmd->fallthrough();

    std::string config_path;
    int search_depth = 0;
    auto* ample_cmd = app.add_subcommand("check-ample", "test a class for very-ampleness");
    ample_cmd->fallthrough();
    ample_cmd->add_option("--class", class_text, "divisor class \"a;b1,...,br\"")->required();
    ample_cmd->add_option("--config", config_path, "point-configuration JSON file");
    ample_cmd->add_option("--search-depth", search_depth,
                          "also try bases reachable by up to this many moves");

    std::string input_path, report_kind = "all";
    auto* analyze_cmd = app.add_subcommand("analyze-surface", "analyze a (2,2) surface");
    analyze_cmd->fallthrough();
    analyze_cmd->add_option("--input", input_path, "surface JSON file")->required();
    analyze_cmd->add_option("--report", report_kind, "zeros | lines | fibers | singular | all")
        ->check(CLI::IsMember({"zeros", "lines", "fibers", "singular", "all"}));

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full acceptance suite");
    verify_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty())
            target = target->get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    detail::Rendered rendered;
    try {
        if (enumerate_cmd->parsed())
            rendered = detail::handle_enumerate(kind, r, polarization);
        else if (apply_cmd->parsed())
            rendered = detail::handle_cremona_apply(centers_text, class_text);
        else if (reduce_cmd->parsed())
            rendered = detail::handle_cremona_reduce(class_text, certificate_path);
        else if (catalogue_cmd->parsed())
            rendered = detail::handle_cremona_catalogue();
        else if (ample_cmd->parsed())
            rendered = detail::handle_check_ample(class_text, config_path, search_depth);
        else if (analyze_cmd->parsed())
            rendered = detail::handle_analyze_surface(input_path, report_kind);
        else
            rendered = detail::handle_verify_paper();
    } catch (const std::exception& e) {
        rendered.status = "error";
        rendered.payload = Json{{"message", e.what()}};
        rendered.human.clear();
        err << "error: " << e.what() << "\n";
    }
    const auto elapsed = std::chrono::steady_clock::now() - started;

    CommandResult result;
    result.status = rendered.status;
    result.payload = rendered.payload;
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (json_mode)
        out << to_json(result).dump(2) << "\n";
    else
        out << rendered.human;

    if (result.status == "ok")
        return 0;
    return result.status == "fail" ? 1 : 2;
}

}  // namespace blowup7::cli
