#pragma once

#include <string>
#include <vector>

namespace chartmark {

/// One reconstructed figure: the ChartMark document plus frozen outputs.
struct CorpusEntry {
    std::string name;
    std::string source_figure;
    std::string document;        // ChartMark JSON text
    std::string golden_vegalite; // frozen Vega-Lite output ("" until frozen)
    std::string golden_ir;       // frozen RenderSpec JSON ("" until frozen)
    std::vector<std::string> required_extensions;
};

/// Entries read from the corpus directory's manifest. The default directory
/// is the in-repo corpus/ tree.
std::vector<CorpusEntry> corpus_entries();
std::vector<CorpusEntry> corpus_entries(const std::string& corpus_dir);

std::string default_corpus_dir();

} // namespace chartmark
