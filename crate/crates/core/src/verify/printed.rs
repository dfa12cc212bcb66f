//! Published reference values, transcribed verbatim.

/// `x^3 y^3` expanded with total degree (in `Q` and `T`) at most 10.
pub const GOLDEN_X3Y3_TOTAL_10: &str = "Q^10+Q^8T^2+2Q^6T^4+Q^4T^6+Q^9+Q^7T^2+2Q^5T^4+Q^8+Q^6T^2+2Q^4T^4+Q^7+Q^5T^2+Q^3T^4+Q^6+Q^4T^2+Q^5+Q^3T^2+Q^4+Q^2T^2+Q^3+Q^2+Q+1";

/// Numerator and expanded denominator of the `x^v y^v` rational function.
pub const XVYV_DISPLAYS: &[(i64, &str, &str)] = &[
    (
        2,
        "Q^6T^8-Q^5T^6+Q^4T^6-Q^4T^4+Q^3T^4+Q^3T^2-Q^2T^2-Q+1",
        "Q^6T^4-2Q^5T^4+Q^4T^4-2Q^4T^2+4Q^3T^2-2Q^2T^2+Q^2-2Q+1",
    ),
    (
        3,
        "Q^12T^18-Q^11T^16+Q^10T^16-Q^10T^14+Q^9T^14+Q^8T^10-2Q^7T^10+Q^6T^10+Q^7T^8-2Q^6T^8+Q^5T^8-Q^6T^6+Q^4T^6+Q^4T^4-Q^3T^4+Q^3T^2-Q^2T^2-Q+1",
        "Q^12T^12-2Q^11T^12+Q^10T^12-2Q^10T^10+4Q^9T^10-2Q^8T^10-2Q^9T^8+5Q^8T^8-4Q^7T^8+Q^6T^8+4Q^7T^6-8Q^6T^6+4Q^5T^6+Q^6T^4-4Q^5T^4+5Q^4T^4-2Q^3T^4-2Q^4T^2+4Q^3T^2-2Q^2T^2+Q^2-2Q+1",
    ),
    (
        4,
        "Q^20T^32-Q^19T^30+Q^18T^30-Q^18T^28+Q^17T^28-Q^15T^24+Q^14T^24+2Q^15T^22-3Q^14T^22+Q^13T^22-2Q^13T^20+2Q^12T^20-Q^12T^16+2Q^11T^16-Q^10T^16-Q^11T^14+3Q^10T^14-3Q^9T^14+Q^10T^12+Q^8T^14+Q^9T^12-3Q^8T^12+Q^7T^12-Q^7T^10+Q^6T^10-Q^7T^8+Q^5T^8-Q^6T^6+2Q^5T^6-Q^4T^6+Q^4T^4-Q^3T^4+Q^3T^2-Q^2T^2-Q+1",
        "Q^20T^24-2Q^19T^24+Q^18T^24-2Q^18T^22+4Q^17T^22-2Q^16T^22-2Q^17T^20+5Q^16T^20-4Q^15T^20-2Q^16T^18+Q^14T^20+8Q^15T^18-10Q^14T^18+4Q^13T^18+5Q^14T^16-12Q^13T^16+9Q^12T^16+4Q^13T^14-2Q^11T^16-12Q^12T^14+12Q^11T^14+Q^12T^12-4Q^10T^14-10Q^11T^12+18Q^10T^12-10Q^9T^12-4Q^10T^10+Q^8T^12+12Q^9T^10-12Q^8T^10-2Q^9T^8+4Q^7T^10+9Q^8T^8-12Q^7T^8+5Q^6T^8+4Q^7T^6-10Q^6T^6+8Q^5T^6+Q^6T^4-2Q^4T^6-4Q^5T^4+5Q^4T^4-2Q^3T^4-2Q^4T^2+4Q^3T^2-2Q^2T^2+Q^2-2Q+1",
    ),
];
