//! Report output: aligned text tables, structured JSON and SVG charts.

use std::fmt::Write;

use stagefuzz::{CentroidPoint, Rational};

use crate::analysis::{AnalysisReport, CombinedAnalysis, GroupAnalysis, UncertaintySummary};
use crate::exact::Exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
    Svg,
}

#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    /// Decimal places in text output.
    pub precision: usize,
    /// Print exact fractions instead of decimals in text output.
    pub exact: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            precision: 3,
            exact: false,
        }
    }
}

pub fn render_report(report: &AnalysisReport, format: OutputFormat, options: &RenderOptions) -> Vec<u8> {
    match format {
        OutputFormat::Text => render_text(report, options).into_bytes(),
        OutputFormat::Structured => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
            out.push(b'\n');
            out
        }
        OutputFormat::Svg => render_svg(report).into_bytes(),
    }
}

struct Fmt<'a>(&'a RenderOptions);

impl Fmt<'_> {
    fn exact(&self, v: Exact) -> String {
        if self.0.exact {
            v.to_string()
        } else {
            self.float(v.to_f64())
        }
    }

    fn float(&self, v: f64) -> String {
        format!("{v:.*}", self.0.precision)
    }
}

/// Left-aligned first column, right-aligned numeric columns.
fn table(out: &mut String, header: &[String], rows: &[Vec<String>]) {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([header[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |out: &mut String, cells: &[String]| {
        let mut text = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c == 0 {
                let _ = write!(text, "{cell:<w$}", w = widths[c]);
            } else {
                let _ = write!(text, "  {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(out, header);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    line(out, &rule);
    for r in rows {
        line(out, r);
    }
}

fn strings<I: IntoIterator<Item = S>, S: Into<String>>(items: I) -> Vec<String> {
    items.into_iter().map(Into::into).collect()
}

fn uncertainty_text(out: &mut String, u: &UncertaintySummary, f: &Fmt) {
    let rows = vec![
        vec!["strife".to_string(), f.float(u.strife)],
        vec!["non-specificity".to_string(), f.float(u.nonspecificity)],
        vec!["total".to_string(), f.float(u.total)],
        vec![format!("shannon (ln {})", u.normalizer), f.float(u.shannon)],
    ];
    table(out, &strings(["measure", "value"]), &rows);
}

fn group_text(out: &mut String, g: &GroupAnalysis, f: &Fmt) {
    let _ = writeln!(out, "Group {} (n = {})\n", g.group_name, g.group_size);

    out.push_str("Stage fuzzy sets\n");
    let mut header = vec!["stage".to_string()];
    header.extend(g.labels.iter().cloned());
    header.extend(strings(["x_c", "y_c"]));
    let rows: Vec<Vec<String>> = g
        .stages
        .iter()
        .map(|s| {
            let mut row = vec![s.name.clone()];
            row.extend(s.grades.iter().map(|v| f.exact(*v)));
            row.push(f.exact(s.centroid.xc));
            row.push(f.exact(s.centroid.yc));
            row
        })
        .collect();
    table(out, &header, &rows);

    out.push_str("\nProfiles with nonzero membership\n");
    let rows: Vec<Vec<String>> = g
        .profiles
        .iter()
        .map(|p| {
            vec![
                p.profile.join(","),
                f.exact(p.membership),
                f.exact(p.probability),
                f.exact(p.possibility),
            ]
        })
        .collect();
    table(out, &strings(["profile", "m_s", "p_s", "r_s"]), &rows);

    out.push_str("\nUncertainty\n");
    uncertainty_text(out, &g.uncertainty, f);
}

fn combined_text(out: &mut String, c: &CombinedAnalysis, f: &Fmt) {
    let _ = writeln!(out, "Combined groups: {}\n", c.group_names.join(", "));
    let mut header = vec!["profile".to_string()];
    header.extend(c.group_names.iter().map(|g| format!("m_s({g})")));
    header.extend(strings(["f(s)", "p(s)", "r(s)"]));
    let rows: Vec<Vec<String>> = c
        .profiles
        .iter()
        .map(|p| {
            let mut row = vec![p.profile.join(",")];
            row.extend(p.memberships.iter().map(|m| f.exact(*m)));
            row.push(f.exact(p.pseudo_frequency));
            row.push(f.exact(p.probability));
            row.push(f.exact(p.possibility));
            row
        })
        .collect();
    table(out, &header, &rows);
    if let Some(u) = &c.uncertainty {
        out.push_str("\nCombined uncertainty\n");
        uncertainty_text(out, u, f);
    }
}

pub fn render_text(report: &AnalysisReport, options: &RenderOptions) -> String {
    let f = Fmt(options);
    let mut out = String::new();
    for (i, g) in report.groups.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        group_text(&mut out, g, &f);
    }
    if let Some(c) = &report.combined {
        if !out.is_empty() {
            out.push('\n');
        }
        combined_text(&mut out, c, &f);
    }
    if !report.verdicts.is_empty() {
        out.push_str("\nCentroid comparison\n");
        let rows: Vec<Vec<String>> = report
            .verdicts
            .iter()
            .map(|v| {
                vec![
                    v.stage.clone(),
                    v.first.clone(),
                    v.second.clone(),
                    v.verdict.to_string(),
                    v.rule.to_string(),
                ]
            })
            .collect();
        table(&mut out, &strings(["stage", "first", "second", "verdict", "rule"]), &rows);
    }
    out
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];
const PANEL_W: f64 = 360.0;
const PANEL_H: f64 = 240.0;
const MARGIN: f64 = 40.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Maps data coordinates (x in `[0, levels]`, y in `[0, 1]`) into a panel.
struct Frame {
    left: f64,
    top: f64,
    x_max: f64,
}

impl Frame {
    fn x(&self, v: f64) -> f64 {
        self.left + MARGIN + v / self.x_max * (PANEL_W - 2.0 * MARGIN)
    }

    fn y(&self, v: f64) -> f64 {
        self.top + PANEL_H - MARGIN - v * (PANEL_H - 2.0 * MARGIN)
    }

    fn axes(&self, out: &mut String, labels: &[String], title: &str) {
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="13">{}</text>"#,
            self.left + MARGIN,
            self.top + 20.0,
            escape(title)
        );
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="black" points="{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}"/>"#,
            self.x(0.0),
            self.y(1.0),
            self.x(0.0),
            self.y(0.0),
            self.x(self.x_max),
            self.y(0.0)
        );
        for (i, label) in labels.iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{}</text>"#,
                self.x(i as f64 + 0.5),
                self.y(0.0) + 14.0,
                escape(label)
            );
        }
    }
}

/// One bar chart per stage (normalized weights, one bar per group and label,
/// centroid marked) and a final scatter of all stage centroids inside the
/// worst/uniform/ideal reference triangle.
pub fn render_svg(report: &AnalysisReport) -> String {
    let stage_count = report.groups.first().map_or(0, |g| g.stages.len());
    let labels: Vec<String> = report
        .groups
        .first()
        .map(|g| g.labels.clone())
        .or_else(|| report.combined.as_ref().map(|c| c.labels.clone()))
        .unwrap_or_default();
    let levels = labels.len().max(1);
    let panels = stage_count + 1;
    let width = PANEL_W * panels as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{PANEL_H:.0}" viewBox="0 0 {width:.0} {PANEL_H:.0}">"#
    );

    for stage in 0..stage_count {
        let frame = Frame {
            left: PANEL_W * stage as f64,
            top: 0.0,
            x_max: levels as f64,
        };
        let title = &report.groups[0].stages[stage].name;
        let _ = writeln!(out, r#"<g class="drawing" id="stage-{}">"#, stage + 1);
        frame.axes(&mut out, &labels, title);
        let groups = report.groups.len() as f64;
        for (gi, g) in report.groups.iter().enumerate() {
            let colour = PALETTE[gi % PALETTE.len()];
            let s = &g.stages[stage];
            for (li, w) in s.normalized.iter().enumerate() {
                let x0 = frame.x(li as f64 + gi as f64 / groups);
                let x1 = frame.x(li as f64 + (gi as f64 + 1.0) / groups);
                let top = frame.y(w.to_f64());
                let _ = writeln!(
                    out,
                    r#"<rect x="{x0:.1}" y="{top:.1}" width="{:.1}" height="{:.1}" fill="{colour}" fill-opacity="0.6"/>"#,
                    x1 - x0,
                    frame.y(0.0) - top
                );
            }
            let _ = writeln!(
                out,
                r#"<circle cx="{:.1}" cy="{:.1}" r="4" fill="{colour}" stroke="black"><title>{} centroid</title></circle>"#,
                frame.x(s.centroid.xc.to_f64()),
                frame.y(s.centroid.yc.to_f64()),
                escape(&g.group_name)
            );
        }
        out.push_str("</g>\n");
    }

    let frame = Frame {
        left: PANEL_W * stage_count as f64,
        top: 0.0,
        x_max: levels as f64,
    };
    out.push_str(r#"<g class="drawing" id="centroids">"#);
    out.push('\n');
    frame.axes(&mut out, &labels, "Centroids");
    let reference: [(&str, CentroidPoint<Rational>); 3] = [
        ("F_w", CentroidPoint::worst()),
        ("F_m", CentroidPoint::uniform(levels)),
        ("F_i", CentroidPoint::ideal(levels)),
    ];
    let points: Vec<String> = reference
        .iter()
        .map(|(_, p)| {
            let p = p.to_f64();
            format!("{:.1},{:.1}", frame.x(p.xc), frame.y(p.yc))
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="none" stroke="grey" stroke-dasharray="4 2"/>"#,
        points.join(" ")
    );
    for (name, p) in &reference {
        let p = p.to_f64();
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="11">{name}</text>"#,
            frame.x(p.xc) + 4.0,
            frame.y(p.yc) - 4.0
        );
    }
    for (gi, g) in report.groups.iter().enumerate() {
        let colour = PALETTE[gi % PALETTE.len()];
        for s in &g.stages {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.1}" cy="{:.1}" r="4" fill="{colour}"><title>{} / {}</title></circle>"#,
                frame.x(s.centroid.xc.to_f64()),
                frame.y(s.centroid.yc.to_f64()),
                escape(&g.group_name),
                escape(&s.name)
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
