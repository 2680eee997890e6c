#include "wedgeaut/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "wedgeaut/engine.hpp"
#include "wedgeaut/report.hpp"

namespace wedgeaut::cli {

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Order of the self-homotopy equivalence group of a wedge of suspensions"};
    app.name("wedgeaut");

    std::string expr;
    bool json = false;
    bool explain = false;
    bool assume_reducible = false;
    std::string table_path;
    std::optional<int> max_weight;

    app.add_option("wedge", expr, "Wedge expression, e.g. \"S2 v M(2,2)\"")->required();
    app.add_flag("--json", json, "Machine-readable JSON report");
    app.add_flag("--explain", explain, "List every factor, including trivial ones");
    app.add_option("--table", table_path, "JSON group table merged over the bundled data");
    app.add_option("--max-weight", max_weight, "Override the commutator weight bound")
        ->check(CLI::PositiveNumber);
    app.add_flag("--assume-reducible", assume_reducible,
                 "Proceed when the reducibility criterion cannot certify the wedge");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        const WedgeInput wedge = parse_wedge(expr);

        std::optional<GroupTable> loaded;
        if (!table_path.empty()) {
            loaded = GroupTable::load_file(table_path);
            for (const auto& w : loaded->warnings()) {
                err << "warning: " << w << "\n";
            }
        }
        const GroupTable& table = loaded ? *loaded : GroupTable::bundled();

        EngineOptions options;
        options.max_weight = max_weight;
        options.assume_reducible = assume_reducible;
        const FactorReport report = aut_order(wedge, table, options);

        if (json) {
            out << to_json(report, explain).dump(2) << "\n";
        } else {
            out << render_text(report, explain);
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NotSimplyConnectedError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvalidInputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const TableLoadError& e) {
        err << "table error: " << e.what() << "\n";
        return kTableError;
    } catch (const ReducibilityError& e) {
        err << "error: " << e.what() << "\n"
            << "hint: pass --assume-reducible if the wedge is known to be reducible\n";
        return kReducibilityUndetermined;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace wedgeaut::cli
