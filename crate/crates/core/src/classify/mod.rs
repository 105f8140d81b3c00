//! Canonical labels for indecomposable modules and the classifier.

mod canon;
mod label;
mod theta;

pub use canon::{classify, dim2_nondegenerate_check, iso_criterion, theta_label, Classification};
pub use label::{construct, CanonicalLabel};
pub use theta::{detect_theta_family, theta_indecomposable, ThetaFamily};
