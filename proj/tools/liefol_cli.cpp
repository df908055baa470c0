// Command-line front end.
//
//   liefol check-jacobi <file>
//   liefol classify <file> [--vertical i,j,...]
//   liefol family <su2su2|su2sl2|su2so2|sl2so2> --params <file> --out <file>
//   liefol reduce <template> --out <file>
//   liefol verify-families [--seed N] [--draws N]
//
// Exit codes: 0 success/pass, 1 usage error, 2 not integrable,
// 3 Jacobi violation (also any verify-families failure), 4 parse error.
// All diagnostics go to standard error; reports go to standard output and
// are byte-identical across runs for identical inputs.

#include <liefol/family_checks.hpp>
#include <liefol/io.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace liefol;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotIntegrable = 2;
constexpr int kExitJacobi = 3;
constexpr int kExitParse = 4;

std::string format_violation(const MetricLieAlgebra& g, const JacobiViolation& v)
{
    std::ostringstream os;
    os << "(" << v.triple[0] << "," << v.triple[1] << "," << v.triple[2] << ") [" << g.basis()[v.triple[0]]
       << "," << g.basis()[v.triple[1]] << "," << g.basis()[v.triple[2]] << "]: defect = [";
    for (std::size_t i = 0; i < v.defect.size(); ++i) {
        if (i) os << ", ";
        os << v.defect[i].str();
    }
    os << "]";
    return os.str();
}

int cmd_check_jacobi(const std::string& file)
{
    ParsedAlgebra parsed = load_algebra_file(file);
    auto violations = jacobi_check(parsed.algebra);
    for (const auto& v : violations) std::cout << format_violation(parsed.algebra, v) << "\n";
    std::cout << violations.size() << " violations\n";
    return violations.empty() ? kExitOk : kExitJacobi;
}

int cmd_classify(const std::string& file, const std::string& vertical_flag)
{
    ParsedAlgebra parsed = load_algebra_file(file);
    std::vector<std::size_t> vertical;
    if (!vertical_flag.empty()) {
        std::stringstream ss(vertical_flag);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                vertical.push_back(std::stoul(item));
            } catch (const std::exception&) {
                std::cerr << "error: bad --vertical entry '" << item << "'\n";
                return kExitUsage;
            }
        }
    } else if (parsed.vertical) {
        vertical = *parsed.vertical;
    } else {
        std::cerr << "error: no vertical block: the file has none and --vertical was not given\n";
        return kExitUsage;
    }

    Splitting s = [&] {
        try {
            return Splitting(parsed.algebra.dim(), vertical);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: bad vertical block: " << e.what() << "\n";
            std::exit(kExitUsage);
        }
    }();

    ClassificationReport report = classify(parsed.algebra, s);
    std::cout << report_to_json(report).dump(2) << "\n";
    return kExitOk;
}

int cmd_family(const std::string& name, const std::string& params_file, const std::string& out_file)
{
    std::ifstream in(params_file);
    if (!in) throw ParseError("cannot open file: " + params_file);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(params_file + ": " + e.what());
    }

    FamilyInstance inst = [&] {
        if (name == "su2su2") return gen_su2_su2(semisimple13_from_json(doc));
        if (name == "su2sl2") return gen_su2_sl2(semisimple13_from_json(doc));
        if (name == "su2so2") return gen_su2_so2(mixed11_from_json(doc));
        return gen_sl2_so2(mixed11_from_json(doc));
    }();
    write_json_file(out_file, algebra_to_json(inst.algebra, inst.splitting.vertical()));
    return kExitOk;
}

int cmd_reduce(const std::string& tmpl, const std::string& out_file)
{
    ReductionResult result = reduce_template(build_ansatz(tmpl));
    write_json_file(out_file, reduction_to_json(result));
    std::cout << tmpl << ": " << result.substitutions.size() << " substitutions, "
              << result.free_vars.size() << " free, " << result.residual.size() << " residual\n";
    return kExitOk;
}

int cmd_verify_families(std::uint64_t seed, std::uint64_t draws)
{
    std::cout << "verify-families seed=" << seed << " draws=" << draws << "\n";
    std::cout << std::left << std::setw(9) << "family" << std::setw(8) << "jacobi" << std::setw(10)
              << "theorems" << std::setw(7) << "forms" << std::setw(12) << "connection" << "oracle\n";
    bool all_ok = true;
    for (FamilyId f : {FamilyId::su2su2, FamilyId::su2sl2, FamilyId::su2so2, FamilyId::sl2so2}) {
        FamilyCheckReport rep = run_family_checks(f, seed, draws);
        auto cell = [](bool ok) { return ok ? "ok" : "FAIL"; };
        std::cout << std::left << std::setw(9) << family_name(f) << std::setw(8) << cell(rep.jacobi)
                  << std::setw(10) << cell(rep.classification) << std::setw(7) << cell(rep.forms)
                  << std::setw(12) << cell(rep.connection) << cell(rep.oracle) << "\n";
        all_ok = all_ok && rep.all();
    }
    std::cout << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? kExitOk : kExitJacobi;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact classification of left-invariant foliations on metric Lie algebras"};
    app.require_subcommand(1);

    std::string file, vertical_flag, family_name_arg, params_file, out_file, template_name;
    std::uint64_t seed = 0, draws = 100;

    auto* check = app.add_subcommand("check-jacobi", "verify the Jacobi identity of an algebra file");
    check->add_option("file", file, "algebra JSON file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "classify the foliation of a split algebra");
    classify_cmd->add_option("file", file, "algebra JSON file")->required();
    classify_cmd->add_option("--vertical", vertical_flag,
                             "comma-separated vertical indices (overrides the file)");

    auto* family = app.add_subcommand("family", "generate a family instance from a parameter file");
    family->add_option("name", family_name_arg, "family name")
        ->required()
        ->check(CLI::IsMember({"su2su2", "su2sl2", "su2so2", "sl2so2"}));
    family->add_option("--params", params_file, "parameter JSON file")->required();
    family->add_option("--out", out_file, "output algebra file")->required();

    auto* reduce = app.add_subcommand("reduce", "reduce the Jacobi constraints of a family template");
    reduce->add_option("template", template_name, "template name")
        ->required()
        ->check(CLI::IsMember({"su2su2", "su2sl2", "su2so2", "sl2so2"}));
    reduce->add_option("--out", out_file, "output reduction JSON file")->required();

    auto* verify = app.add_subcommand("verify-families", "run the seeded family property suite");
    verify->add_option("--seed", seed, "random seed (default 0)");
    verify->add_option("--draws", draws, "draws per family (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check_jacobi(file);
        if (classify_cmd->parsed()) return cmd_classify(file, vertical_flag);
        if (family->parsed()) return cmd_family(family_name_arg, params_file, out_file);
        if (reduce->parsed()) return cmd_reduce(template_name, out_file);
        if (verify->parsed()) return cmd_verify_families(seed, draws);
    } catch (const liefol::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const liefol::NotIntegrableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotIntegrable;
    } catch (const liefol::JacobiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitJacobi;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
