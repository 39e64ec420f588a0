#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_depth::depth::{verify_certificate, DepthCertificate, Param};
use matroid_depth::{Field, Matrix, RepMatroid};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cert) = DepthCertificate::from_json(text) else {
        return;
    };
    let a = Matrix::from_rows(Field::gf2(), &[[1u8, 0, 1], [0, 1, 1]], 3).unwrap();
    let m = RepMatroid::new(a);
    for p in Param::ALL {
        let _ = verify_certificate(&m, p, &cert);
    }
});
