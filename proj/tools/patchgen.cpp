// Generates planar patches by face-by-face growth and writes them as
// planar_code, for use as survey/ingest fixtures.
#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "altan/planar_code.hpp"
#include "patch_growth.hpp"

using namespace altan;

int main(int argc, char** argv) {
    CLI::App app("patch generator (face-by-face growth)");

    std::string sizes_arg = "6";
    int max_faces = 4;
    int min_faces = 1;
    std::string out_path;
    bool quiet = false;
    app.add_option("--sizes", sizes_arg, "comma-separated face sizes, e.g. 5,6")
        ->capture_default_str();
    app.add_option("--max-faces", max_faces, "largest face count to emit")
        ->capture_default_str();
    app.add_option("--min-faces", min_faces, "smallest face count to emit")
        ->capture_default_str();
    app.add_option("--out", out_path, "output planar_code file (default stdout)");
    app.add_flag("--quiet", quiet, "suppress the per-level summary");

    CLI11_PARSE(app, argc, argv);

    std::vector<int> sizes;
    std::stringstream ss(sizes_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int r = std::stoi(tok);
        if (r < 3 || r > 16) {
            std::cerr << "face size out of range: " << r << "\n";
            return 1;
        }
        sizes.push_back(r);
    }
    if (sizes.empty() || max_faces < min_faces || min_faces < 1) {
        std::cerr << "nothing to generate\n";
        return 1;
    }

    std::vector<PlanarPatch> patches;
    std::map<int, int> per_level;
    growth::enumerate_patches(sizes, max_faces, [&](const growth::GrowthPatch& gp) {
        int f = static_cast<int>(gp.face_sizes.size());
        ++per_level[f];
        if (f < min_faces) return;
        patches.push_back(growth::to_planar_patch(gp));
    });

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        write_planar_code(out, patches);
    } else {
        write_planar_code(std::cout, patches);
    }

    if (!quiet) {
        for (auto [f, c] : per_level)
            std::cerr << "faces " << f << ": " << c << " patches\n";
        std::cerr << "wrote " << patches.size() << " records\n";
    }
    return 0;
}
