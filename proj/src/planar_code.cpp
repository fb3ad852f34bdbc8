#include "altan/planar_code.hpp"

#include <istream>
#include <ostream>

namespace altan {

namespace {

const std::string kHeader = ">>planar_code<<";

int read_label(std::istream& in, bool wide) {
    if (!wide) {
        int c = in.get();
        if (c == EOF) throw TruncatedRecord("planar_code: record ends mid-vertex");
        return c;
    }
    int lo = in.get();
    int hi = in.get();
    if (lo == EOF || hi == EOF) throw TruncatedRecord("planar_code: record ends mid-label");
    return lo | (hi << 8);
}

} // namespace

IngestResult read_planar_code(std::istream& in) {
    std::string head(kHeader.size(), '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    if (in.gcount() != static_cast<std::streamsize>(head.size()) || head != kHeader)
        throw MalformedHeader("planar_code: missing \">>planar_code<<\" header");

    IngestResult result;
    int record = 0;
    for (;;) {
        int first = in.get();
        if (first == EOF) break;
        ++record;
        bool wide = false;
        int n = first;
        if (n == 0) {
            wide = true;
            n = read_label(in, true);
        }
        if (n <= 0) throw TruncatedRecord("planar_code: record " + std::to_string(record) +
                                          " declares " + std::to_string(n) + " vertices");

        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                int w = read_label(in, wide);
                if (w == 0) break;
                if (w < 1 || w > n)
                    throw TruncatedRecord("planar_code: record " + std::to_string(record) +
                                          " lists vertex " + std::to_string(w) + " of " +
                                          std::to_string(n));
                rot[v].push_back(w - 1);
            }
        }

        try {
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < n; ++v)
                for (int w : rot[v])
                    if (v < w) edges.emplace_back(v, w);
            Graph g = make_graph(n, edges);
            try {
                result.patches.push_back(make_patch(g, rot));
            } catch (const AmbiguousOuterFace&) {
                bool all_deg2 = true;
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) != 2) all_deg2 = false;
                if (!all_deg2) throw;
                // a bare cycle: both faces are equivalent up to reflection
                result.patches.push_back(make_patch(g, rot, 0));
            }
        } catch (const Error& e) {
            ++result.skipped;
            result.warnings.push_back("record " + std::to_string(record) + ": " + e.what());
        }
    }
    return result;
}

void write_planar_code(std::ostream& out, const std::vector<PlanarPatch>& patches) {
    out.write(kHeader.data(), static_cast<std::streamsize>(kHeader.size()));
    for (const PlanarPatch& p : patches) {
        const int n = p.graph.n;
        bool wide = n > 255;
        auto put = [&](int value) {
            if (wide) {
                out.put(static_cast<char>(value & 0xff));
                out.put(static_cast<char>((value >> 8) & 0xff));
            } else {
                out.put(static_cast<char>(value));
            }
        };
        if (wide) out.put(static_cast<char>(0));
        put(n);
        for (int v = 0; v < n; ++v) {
            for (int w : p.rotation[v]) put(w + 1);
            put(0);
        }
    }
}

} // namespace altan
