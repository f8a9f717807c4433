//! Static SVG charts: line charts for vocabulary growth and stacked area
//! plots for overlap ratios. Deterministic output, no interactivity.

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 25.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 55.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

/// One named line.
#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

struct Area {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Area {
    fn x(&self, v: f64) -> f64 {
        if self.x_max == self.x_min {
            self.x0
        } else {
            self.x0 + (v - self.x_min) / (self.x_max - self.x_min) * self.w
        }
    }

    fn y(&self, v: f64) -> f64 {
        if self.y_max == self.y_min {
            self.y0 + self.h
        } else {
            self.y0 + self.h - (v - self.y_min) / (self.y_max - self.y_min) * self.h
        }
    }
}

fn open_svg(out: &mut String, title: &str) {
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    ));
}

fn axes(out: &mut String, area: &Area, x_label: &str, y_label: &str) {
    out.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
        area.x0,
        area.y0 + area.h,
        area.x0 + area.w,
        area.y0 + area.h
    ));
    out.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
        area.x0,
        area.y0,
        area.x0,
        area.y0 + area.h
    ));
    for i in 0..=4 {
        let frac = i as f64 / 4.0;
        let xv = area.x_min + frac * (area.x_max - area.x_min);
        let yv = area.y_min + frac * (area.y_max - area.y_min);
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
            area.x(xv),
            area.y0 + area.h + 18.0,
            format_tick(xv)
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{}</text>\n",
            area.x0 - 6.0,
            area.y(yv) + 4.0,
            format_tick(yv)
        ));
    }
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
        area.x0 + area.w / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    ));
    out.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1})\">{}</text>\n",
        area.y0 + area.h / 2.0,
        area.y0 + area.h / 2.0,
        escape(y_label)
    ));
}

fn legend(out: &mut String, labels: &[&str], x: f64) {
    for (i, label) in labels.iter().enumerate() {
        let y = MARGIN_TOP + 8.0 + 18.0 * i as f64;
        let color = PALETTE[i % PALETTE.len()];
        out.push_str(&format!(
            "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n",
            x,
            y - 10.0,
            color
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\">{}</text>\n",
            x + 16.0,
            y,
            escape(label)
        ));
    }
}

/// Multi-series line chart.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let points = series.iter().flat_map(|s| s.points.iter());
    let x_max = points.clone().map(|p| p.0).fold(1.0_f64, f64::max);
    let y_max = series
        .iter()
        .flat_map(|s| s.points.iter())
        .map(|p| p.1)
        .fold(1.0_f64, f64::max);
    let area = Area {
        x0: MARGIN_LEFT,
        y0: MARGIN_TOP,
        w: WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        h: HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
        x_min: 0.0,
        x_max,
        y_min: 0.0,
        y_max,
    };
    let mut out = String::new();
    open_svg(&mut out, title);
    axes(&mut out, &area, x_label, y_label);
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", area.x(x), area.y(y)))
            .collect();
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            color,
            coords.join(" ")
        ));
    }
    let labels: Vec<&str> = series.iter().map(|s| s.label.as_str()).collect();
    legend(&mut out, &labels, MARGIN_LEFT + 10.0);
    out.push_str("</svg>\n");
    out
}

/// Stacked area plot over categorical x positions: `layers` hold one value
/// per category and stack bottom-up in the given order.
pub fn stacked_area(
    title: &str,
    x_labels: &[String],
    y_label: &str,
    layers: &[(String, Vec<f64>)],
) -> String {
    let categories = x_labels.len().max(1);
    let mut totals = vec![0.0_f64; categories];
    for (_, values) in layers {
        for (t, v) in totals.iter_mut().zip(values) {
            *t += v;
        }
    }
    let y_max = totals.iter().copied().fold(1.0_f64, f64::max);
    let area = Area {
        x0: MARGIN_LEFT,
        y0: MARGIN_TOP,
        w: WIDTH - MARGIN_LEFT - MARGIN_RIGHT,
        h: HEIGHT - MARGIN_TOP - MARGIN_BOTTOM,
        x_min: 0.0,
        x_max: (categories - 1).max(1) as f64,
        y_min: 0.0,
        y_max,
    };
    let mut out = String::new();
    open_svg(&mut out, title);
    axes(&mut out, &area, "", y_label);
    let mut baseline = vec![0.0_f64; categories];
    for (i, (_, values)) in layers.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let top: Vec<(f64, f64)> = baseline
            .iter()
            .enumerate()
            .map(|(c, &base)| (c as f64, base + values.get(c).copied().unwrap_or(0.0)))
            .collect();
        let mut path: Vec<String> = top
            .iter()
            .map(|&(x, y)| format!("{:.1},{:.1}", area.x(x), area.y(y)))
            .collect();
        for c in (0..categories).rev() {
            path.push(format!(
                "{:.1},{:.1}",
                area.x(c as f64),
                area.y(baseline[c])
            ));
        }
        out.push_str(&format!(
            "<polygon fill=\"{}\" fill-opacity=\"0.75\" stroke=\"{}\" points=\"{}\"/>\n",
            color,
            color,
            path.join(" ")
        ));
        for (b, t) in baseline.iter_mut().zip(&top) {
            *b = t.1;
        }
    }
    for (c, label) in x_labels.iter().enumerate() {
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
            area.x(c as f64),
            area.y0 + area.h + 34.0,
            escape(label)
        ));
    }
    let labels: Vec<&str> = layers.iter().map(|(l, _)| l.as_str()).collect();
    legend(&mut out, &labels, WIDTH - MARGIN_RIGHT - 150.0);
    out.push_str("</svg>\n");
    out
}

fn format_tick(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() >= 1000.0 {
        format!("{:.0}", v)
    } else if v.abs() >= 1.0 {
        format!("{:.1}", v)
    } else {
        format!("{:.2}", v)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
