#pragma once

#include "dglift/format.hpp"

namespace dglift {

/* A certificate file decoupled from live category data: linear
 * combinations stay as (coefficient, label) lists until they are bound
 * to a problem. */
struct CertificateData {
    Field field = Field::rationals();
    std::string transform_name;
    std::string from_name, to_name;
    int d_max = 2;
    std::map<std::string, Vec> classes;                          // CLASS lines
    std::vector<std::pair<std::string, std::vector<std::pair<FieldElement, std::string>>>> at_lines;  // h^0
    std::vector<std::tuple<int, Tuple, std::vector<std::pair<FieldElement, std::string>>>> comp_lines;  // h^d
    bool iso_flag = false;
    std::map<std::string, Vec> inverse_classes;
    std::vector<std::string> transcript;

    bool operator==(const CertificateData& other) const;
};

/* Canonical serialization: object lines in source-category order,
 * component lines in the tuple enumeration order, one content digest at
 * the end. Equal certificates serialize byte-identically. */
std::string serialize_certificate(const Problem& problem, const LiftCertificate& cert);

CertificateData certificate_data(const Problem& problem, const LiftCertificate& cert);
std::string serialize_certificate_data(const CertificateData& data);

/* Parses and verifies the digest. */
CertificateData parse_certificate(const std::string& text);

/* Independent re-verification of a certificate against a problem file:
 * rebuilds the transformation from the raw data and re-runs every
 * check; the transcript is never trusted. Returns findings; empty means
 * verified. */
std::vector<std::string> certify_against_problem(const Problem& problem, const CertificateData& data);

}  // namespace dglift
