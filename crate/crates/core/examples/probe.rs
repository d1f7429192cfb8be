use radon_pairs::analysis::*;
use radon_pairs::phantom;
use radon_pairs::radon::*;
use radon_pairs::signal::*;
use radon_pairs::wavelet::*;
use radon_pairs::linalg::Vec2;

fn main() {
    let psi = make_sim2_wavelet().unwrap();
    // lowpass closed form check at a_cut=0.5: probe one node
    let g = Grid2::square(48, 1.0/6.0).unwrap();
    let phi = make_phi_lowpass(&psi, 0.5, g).unwrap();
    let spec = dft2_unitary(&phi);
    for (k1,k2) in [(24usize,30usize),(30,24),(40,40)] {
        let xi = spec.freq(k1,k2).norm();
        let want = (-std::f64::consts::PI*0.25*xi*xi).exp();
        println!("a_cut=0.5 |xi|={xi:.3}: got {} want {want}", spec.at(k1,k2).re);
    }
    // voice calderon coverage: effective multiplier M(xi)
    let b = Grid2::square(64, 1.0 / 8.0).unwrap();
    for (nsc, amin, amax) in [(16usize, 0.125f64, 8.0f64), (24, 0.0625, 8.0), (16, 0.125, 4.0)] {
        let gg = GroupGrid::sim2(12, amin, amax, nsc, b).unwrap();
        // M at a few |xi|
        for xin in [0.15, 0.5, 1.0, 2.0, 2.8] {
            let xi = Vec2::new(xin, 0.0);
            let m: f64 = (0..gg.n_scales()).map(|j| {
                let k = kernel_hat(GroupKind::Sim2, &psi, 0.0, gg.scales[j], xi);
                gg.haar_weight(j) / gg.angle_step * k * k * std::f64::consts::TAU / gg.scales[j].powi(0)
            }).sum::<f64>();
            // note: haar_weight includes angle_step; multiply count of angles
            print!(" M({xin})={:.4}", m);
        }
        println!("  <- nsc={nsc} amin={amin} amax={amax}");
    }
    // window slice errors vs psi grid resolution
    for (n, dx) in [(128usize, 1.0/8.0), (128, 1.0/16.0), (192, 1.0/16.0)] {
        let pg = Grid2::square(n, dx).unwrap();
        let t_axis = PolarSinogram::default_t_axis(&pg, 256);
        let w = make_psi_polar(&psi, pg, 24, t_axis, pg.dx/2.0);
        let rows = dft1_rows(&w.samples, w.n_theta, &t_axis);
        let mut sup_err = 0.0f64; let mut sup_ref = 0.0f64;
        for i in 0..w.n_theta {
            let om = Vec2::unit(w.theta(i));
            for k in 0..t_axis.n {
                let tau = t_axis.freq(k);
                if tau.abs() > 0.8*(0.5/pg.dx).min(t_axis.nyquist()) { continue; }
                let want = tau.abs()*psi.f_hat(om*tau);
                let got = rows[i*t_axis.n+k];
                sup_err = sup_err.max((got.re-want).abs().max(got.im.abs()));
                sup_ref = sup_ref.max(want.abs());
            }
        }
        println!("psi grid {n}@{dx}: window slice rel {:.3e}", sup_err/sup_ref);
        let img = psi.to_image(pg);
        let sino = radon_polar(&img, 32, t_axis, pg.dx / 2.0);
        println!("   psi sino slice {:.3e}", slice_check_polar(&img, &sino, 8));
    }
}
