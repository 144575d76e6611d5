use critical_curves::chain::{decompose, Chain};
use critical_curves::net::net;
use critical_curves::orbit::CriticalPoint;
use critical_curves::render::{
    decomposition_csv, decomposition_svg, net_csv, net_svg, pencils_svg, triples_svg, RenderOptions, CSV_HEADER,
};
use critical_curves::triple::triple_points;
use critical_curves::Rational;

fn zeta(t: &str, r: &str) -> CriticalPoint {
    CriticalPoint::new(t.parse().unwrap(), r.parse().unwrap()).unwrap()
}

fn well_formed(svg: &str) {
    assert!(svg.starts_with("<svg"), "{}", &svg[..40.min(svg.len())]);
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<g").count(), svg.matches("</g>").count());
    assert!(!svg.contains("NaN") && !svg.contains("inf"));
}

#[test]
fn every_figure_is_well_formed_and_deterministic() {
    let opts = RenderOptions::default();
    let d = decompose(&Chain::new(7, 5).unwrap()).unwrap();
    let z = zeta("3/5", "2/5");
    let mut normalized = opts.clone();
    normalized.normalize = true;
    let figures = [
        net_svg(&net(4).unwrap(), &opts).unwrap(),
        decomposition_svg(&d, &opts).unwrap(),
        pencils_svg(&z, 3, &opts).unwrap(),
        pencils_svg(&zeta("1/3", "0"), 2, &opts).unwrap(),
        triples_svg(&triple_points(&z).unwrap(), &opts).unwrap(),
        triples_svg(&triple_points(&zeta("3/7", "2/7")).unwrap(), &normalized).unwrap(),
    ];
    for svg in &figures {
        well_formed(svg);
    }
    assert_eq!(figures[1], decomposition_svg(&d, &opts).unwrap());
}

#[test]
fn pencil_figure_has_its_layers() {
    let svg = pencils_svg(&zeta("2/5", "3/5"), 3, &RenderOptions::default()).unwrap();
    for layer in ["dominant", "pencils", "neighbour-dominant", "points"] {
        assert!(svg.contains(&format!("id=\"{layer}\"")), "layer {layer}");
    }
}

#[test]
fn scale_sets_the_canvas() {
    let opts = RenderOptions { scale: Some(100.0), ..RenderOptions::default() };
    let svg = net_svg(&net(2).unwrap(), &opts).unwrap();
    assert!(svg.contains("width=\"180\""), "{}", svg.lines().next().unwrap());
}

#[test]
fn csv_lists_every_curve() {
    let d = decompose(&Chain::new(7, 5).unwrap()).unwrap();
    let csv = decomposition_csv(&d);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], CSV_HEADER);
    assert_eq!(rows[1], "7,5,5/7,3/4,0/1,1/4,abbbbbb");
    assert_eq!(rows.len(), 5);

    let n = net(3).unwrap();
    let csv = net_csv(&n).unwrap();
    let curves: usize = n.chains.iter().map(|c| decompose(c).unwrap().curves.len()).sum();
    assert_eq!(csv.lines().count(), curves + 1);
}

#[test]
fn segments_stay_on_their_chains() {
    for c in net(6).unwrap().chains {
        let d = decompose(&c).unwrap();
        for curve in &d.curves {
            for t in [&curve.theta_lo, &curve.theta_hi] {
                let rho: Rational = c.rho_at(t);
                assert!(rho.in_unit_interval(), "{c} at {t}");
            }
        }
    }
}
