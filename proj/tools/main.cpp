#include "homvar/cli.hpp"
#include "homvar/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homvar - exact variational calculus of homogeneous Lagrangians"};
    app.require_subcommand(1);

    std::string decl_path;
    std::string json_path;
    homvar::RunOptions options;
    int q_flag = -1;

    auto add_common = [&](CLI::App* sub, bool needs_decl) {
        if (needs_decl)
            sub->add_option("declaration", decl_path,
                            "problem file: m=<int> n=<int> k=<int> L = <expr>")
                ->required()
                ->check(CLI::ExistingFile);
        sub->add_option("--json", json_path, "write the JSON report to a file");
        sub->add_option("--max-terms", options.max_terms,
                        "elide forms with more terms in text output");
        return sub;
    };

    add_common(app.add_subcommand("check-homogeneous",
                                  "evaluate the homogeneity conditions"),
               true);
    add_common(app.add_subcommand("hilbert", "print the Hilbert forms"), true);
    add_common(app.add_subcommand("euler-lagrange",
                                  "Euler-Lagrange form by both routes"),
               true);
    add_common(app.add_subcommand("theta", "print Theta_q"), true)
        ->add_option("--q", q_flag, "value degree step (default m)");
    add_common(app.add_subcommand("verify-recovery",
                                  "check Theta_q = 1/(m-q) i_T Theta_{q+1}"),
               true)
        ->add_option("--q", q_flag, "single q to check (default: all)");
    add_common(app.add_subcommand("verify-closure",
                                  "null Lagrangian vs closed fundamental form"),
               true);
    add_common(app.add_subcommand("verify-identities",
                                  "coefficient identity sweeps"),
               false)
        ->add_option("--max-q", options.max_q, "sweep bound (default 12)");
    add_common(app.add_subcommand("verify-lemmas",
                                  "structural identities on a declaration"),
               true)
        ->add_option("--seed", options.seed, "seed for randomized checks");

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    std::optional<homvar::ProblemDecl> decl;
    try {
        if (!decl_path.empty())
            decl = homvar::parse_problem(read_file(decl_path));
        if (q_flag >= 0) options.q = q_flag;
        homvar::RunResult result =
            homvar::run_command(sub->get_name(), decl, options);
        std::cout << result.text;
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            out << result.json << "\n";
        }
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
