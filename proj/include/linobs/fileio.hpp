#ifndef LINOBS_FILEIO_HPP
#define LINOBS_FILEIO_HPP

#include "linobs/amalgam.hpp"
#include "linobs/matrixcore.hpp"

#include <string>
#include <string_view>

namespace linobs {

// JSON documents. Entries are written as canonical scalar strings and may
// be read back from strings ("1/2", "z^2-1") or JSON integers.
//
//   matrix:          {"field": "rational", "n": 2, "entries": [["1","0"],["0","1"]]}
//   representation:  {"field": ..., "dim": 2, "gluing": [2,1,3,2], "X": [[...]], ..., "T": [[...]]}

std::string write_matrix(const ExactMatrix& m);
/// Throws std::invalid_argument on malformed input.
ExactMatrix read_matrix(std::string_view text);

struct RepresentationFile {
    Representation rho;
    GluingData gluing;
};

std::string write_representation(const Representation& rho, const GluingData& g);
/// Parses, validates the gluing and the images. Throws std::invalid_argument.
RepresentationFile read_representation(std::string_view text);

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace linobs

#endif  // LINOBS_FILEIO_HPP
