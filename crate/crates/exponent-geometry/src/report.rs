//! Structured text rendering of vertex sets and membership certificates.
//!
//! All rationals are printed as exact `num/den` fractions so reports can be
//! diffed and replayed without floating-point noise.

use crate::exponents::format_rational;
use crate::membership::MembershipCertificate;
use crate::vertices::VertexSet;

/// Renders the vertex set, one vertex per line in lexicographic order.
pub fn vertex_report(vs: &VertexSet) -> String {
    let mut out = String::new();
    let profile = vs.profile();
    out.push_str(&format!(
        "m = {}, n = {}, s = ({})\n",
        profile.m(),
        profile.n(),
        profile
            .s()
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    out.push_str(&format!("vertices = {}\n", vs.len()));
    for v in vs.vertices() {
        out.push_str(&v.display());
        out.push('\n');
    }
    out
}

/// Renders a membership certificate on one line.
pub fn certificate_report(cert: &MembershipCertificate) -> String {
    cert.describe()
}
