#include "m0n/cli.hpp"

#include "m0n/swclass.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace m0n::cli {

namespace {

std::string tuple(const std::vector<std::size_t>& values) {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::to_string(values[i]);
    }
    return s + ")";
}

std::string side_text(const std::vector<int>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(labels[i]);
    }
    return s;
}

std::string split_text(const FacetSplit& f) { return "K{" + side_text(f.L) + "|" + side_text(f.K) + "}"; }

void range_note(int n, std::ostream& out) {
    if (n < 5) out << "note: n = " << n << " is outside the theorem's stated range (n >= 5)\n";
}

std::vector<std::pair<CellKey, const LabeledPolygon*>> all_cells(const CellComplex& c) {
    std::vector<std::pair<CellKey, const LabeledPolygon*>> out;
    for (const auto& stratum : c.cells) {
        for (const auto& [key, rep] : stratum) out.emplace_back(key, &rep);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<AdjacencyEdge> all_incidences(const CellComplex& c) {
    std::vector<AdjacencyEdge> out;
    for (const auto& [key, records] : c.incidences) {
        for (const auto& rec : records) out.push_back({rec.parent, rec.facet, rec.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const AdjacencyEdge& a, const AdjacencyEdge& b) {
        return std::tie(a.parent, a.facet) < std::tie(b.parent, b.facet);
    });
    return out;
}

int dimension_of(const CellComplex& c, const CellKey& key) { return c.dimension() - key.codimension(); }

}  // namespace

std::string export_json(const CellComplex& c) {
    nlohmann::ordered_json doc;
    doc["n"] = c.n;
    doc["cells"] = nlohmann::ordered_json::array();
    for (const auto& [key, rep] : all_cells(c)) {
        nlohmann::ordered_json cell;
        cell["key"] = key.hex();
        cell["dim"] = dimension_of(c, key);
        cell["word"] = rep->word;
        cell["diagonals"] = nlohmann::ordered_json::array();
        for (const Arc& a : rep->diagonals) cell["diagonals"].push_back({a.start, a.length});
        doc["cells"].push_back(std::move(cell));
    }
    doc["incidences"] = nlohmann::ordered_json::array();
    for (const auto& e : all_incidences(c)) {
        nlohmann::ordered_json rec;
        rec["parent"] = e.parent.hex();
        rec["facet"] = e.facet.hex();
        rec["multiplicity"] = e.multiplicity;
        doc["incidences"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string export_dot(const CellComplex& c) {
    std::ostringstream os;
    os << "graph m0n_" << c.n << " {\n";
    for (const auto& [key, rep] : all_cells(c)) {
        os << "  \"" << key.hex() << "\" [label=\"" << display(*rep) << "\", dim=" << dimension_of(c, key)
           << "];\n";
    }
    for (const auto& e : all_incidences(c)) {
        os << "  \"" << e.parent.hex() << "\" -- \"" << e.facet.hex() << "\" [multiplicity=" << e.multiplicity
           << "];\n";
    }
    os << "}\n";
    return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.n < 4 || config.n > config.max_n) {
        err << "error: n must lie in [4, " << config.max_n << "], got " << config.n << "\n";
        return ExitCode::usage;
    }
    const Rational epsilon = config.epsilon.value_or(default_epsilon());
    if (epsilon.is_zero() || (epsilon.sign() > 0 ? epsilon : -epsilon) > default_epsilon()) {
        err << "error: --epsilon must be nonzero with magnitude at most 1/64\n";
        return ExitCode::usage;
    }

    const CellComplex complex = enumerate_cells(config.n, EnumerationOptions{config.max_n, std::nullopt});

    switch (config.command) {
    case Command::cells: {
        auto f = f_vector(complex);
        std::reverse(f.begin(), f.end());
        out << "f = " << tuple(f) << ", χ = " << euler_characteristic(complex) << "\n";
        return ExitCode::ok;
    }
    case Command::betti: {
        const auto b = betti_gf2(complex);
        long alternating = 0;
        for (std::size_t i = 0; i < b.size(); ++i) alternating += (i % 2 == 0 ? 1 : -1) * static_cast<long>(b[i]);
        out << "betti_gf2 = " << tuple(b) << ", alternating sum = " << alternating
            << ", χ = " << euler_characteristic(complex) << "\n";
        return ExitCode::ok;
    }
    case Command::sw: {
        range_note(config.n, out);
        const GF2Chain theta = theta_by_criterion(complex);
        out << "|Θ| = " << theta.support.size() << "\n";
        for (const auto& key : theta.support) {
            const LabeledPolygon& rep = complex.cells[1].at(key);
            out << "  " << display(rep) << "  " << split_text(facet_split(rep)) << "\n";
        }
        const ThetaReport report = theta_checks(complex, theta);
        out << "is_cycle = " << (report.is_cycle ? "true" : "false")
            << ", is_nontrivial = " << (report.is_nontrivial ? "true" : "false") << "\n";
        return ExitCode::ok;
    }
    case Command::verify: {
        range_note(config.n, out);
        std::vector<FacetVerdict> verdicts;
        try {
            verdicts = facet_verdicts(complex, epsilon);
        } catch (const OracleFailure& e) {
            err << "oracle failure at facet " << e.facet().hex() << ": " << e.what() << "\n";
            return ExitCode::oracle;
        }
        std::size_t agree = 0, theta_criterion_count = 0, theta_agree = 0;
        for (const auto& v : verdicts) {
            if (v.in_theta() == v.criterion) ++agree;
            else {
                out << "MISMATCH " << v.facet.hex() << " " << display(v.facet.polygon()) << " "
                    << split_text(v.split) << ": criterion=" << v.criterion << " oracle=" << v.in_theta() << "\n";
            }
            if (v.criterion) {
                ++theta_criterion_count;
                if (v.in_theta()) ++theta_agree;
            }
        }
        out << agree << "/" << verdicts.size() << " facet verdicts agree\n";
        out << theta_agree << "/" << theta_criterion_count << " Θ cells confirmed by the Jacobian oracle\n";
        return agree == verdicts.size() ? ExitCode::ok : ExitCode::mismatch;
    }
    case Command::export_graph: {
        const std::string text = config.format == ExportFormat::json ? export_json(complex) : export_dot(complex);
        if (!config.output_path) {
            out << text;
            return ExitCode::ok;
        }
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << *config.output_path << " for writing\n";
            return ExitCode::io;
        }
        file << text;
        file.flush();
        if (!file) {
            err << "error: write to " << *config.output_path << " failed\n";
            return ExitCode::io;
        }
        return ExitCode::ok;
    }
    }
    return ExitCode::usage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cell complex and first Stiefel-Whitney class of the real moduli space M_0,n"};
    app.require_subcommand(1);

    RunConfig config;
    std::string epsilon_text;
    std::string format_text = "json";
    std::string output;

    struct Sub {
        const char* name;
        Command command;
        const char* help;
    };
    const Sub subs[] = {
        {"cells", Command::cells, "print the f-vector and Euler characteristic"},
        {"betti", Command::betti, "print GF(2) Betti numbers"},
        {"sw", Command::sw, "list the cells of the dual Stiefel-Whitney cycle"},
        {"verify", Command::verify, "compare the parity criterion with the Jacobian oracle"},
        {"export", Command::export_graph, "write the cell adjacency graph"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("n,--n", config.n, "number of marked points")->required();
        sub->add_option("--out", output, "output path (export)");
        sub->add_option("--format", format_text, "export format")->check(CLI::IsMember({"json", "dot"}));
        sub->add_option("--epsilon", epsilon_text, "hyperbola parameter p/q");
        sub->add_option("--max-n", config.max_n, "enumeration bound");
        sub->callback([&config, cmd = s.command] { config.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto chosen = app.get_subcommands();
        out << (chosen.empty() ? app.help() : chosen.front()->help());
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return ExitCode::usage;
    }

    if (!output.empty()) config.output_path = output;
    config.format = format_text == "dot" ? ExportFormat::dot : ExportFormat::json;
    if (!epsilon_text.empty()) {
        try {
            config.epsilon = Rational::parse(epsilon_text);
        } catch (const std::exception& e) {
            err << "usage error: bad --epsilon '" << epsilon_text << "': " << e.what() << "\n";
            return ExitCode::usage;
        }
    }
    return run(config, out, err);
}

}  // namespace m0n::cli
