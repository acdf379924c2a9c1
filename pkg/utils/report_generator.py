from reportlab.platypus import (
    SimpleDocTemplate, Table, TableStyle,
    Paragraph, Spacer
)
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.lib import colors
from reportlab.lib.units import mm
from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill

import logging
from typing import Sequence
from xml.sax.saxutils import escape

from models.report import SweepRow, VerificationReport, VerificationStatus
from utils.exporters import sweep_table

logger = logging.getLogger(__name__)

# Built-in Type 1 font; nothing to register.
FONT = "Helvetica"

STATUS_COLORS = {
    VerificationStatus.MATCH: colors.HexColor("#d9f0d3"),
    VerificationStatus.MISMATCH: colors.HexColor("#f4a582"),
    VerificationStatus.MISMATCH_KNOWN: colors.HexColor("#fee090"),
}


class ReportGenerator:

    @staticmethod
    def generate_verification_pdf(report: VerificationReport, path: str) -> str:

        doc = SimpleDocTemplate(
            path,
            pagesize=A4,
            leftMargin=15,
            rightMargin=15,
            topMargin=20,
            bottomMargin=20,
            invariant=1,
            title="Simulation study verification",
        )

        styles = getSampleStyleSheet()
        styles.add(ParagraphStyle(
            name="HeadingCenter",
            parent=styles["Heading1"],
            alignment=1,
            fontName=FONT
        ))
        styles.add(ParagraphStyle(
            name="Cell",
            parent=styles["Normal"],
            fontName=FONT,
            fontSize=7.5,
            leading=9
        ))

        story = []

        # ---------------- TITLE ----------------
        story.append(Paragraph("<b>Simulation study verification</b>", styles["HeadingCenter"]))
        story.append(Spacer(1, 6))
        outcome = "PASSED" if report.passed else "FAILED"
        story.append(Paragraph(f"Result: <b>{outcome}</b> ({len(report.failures)} must-match failures)",
                               styles["Cell"]))
        story.append(Spacer(1, 12))

        # ---------------- TABLE ----------------
        table_data = [["#", "Item", "Computed", "Published", "Tolerance", "Status", "Note"]]
        for idx, item in enumerate(report.items, start=1):
            table_data.append([
                idx,
                Paragraph(escape(item.item), styles["Cell"]),
                Paragraph(escape(item.computed), styles["Cell"]),
                Paragraph(escape(item.published), styles["Cell"]),
                item.tolerance or "",
                item.status.value,
                Paragraph(escape(item.note or ""), styles["Cell"]),
            ])

        col_widths = [8 * mm, 42 * mm, 32 * mm, 32 * mm, 18 * mm, 24 * mm, 40 * mm]
        table = Table(table_data, colWidths=col_widths, repeatRows=1)

        table_style = [
            ("FONTNAME", (0, 0), (-1, -1), FONT),
            ("GRID", (0, 0), (-1, -1), 0.4, colors.grey),
            ("BACKGROUND", (0, 0), (-1, 0), colors.lightgrey),
            ("ALIGN", (0, 0), (-1, 0), "CENTER"),
            ("ALIGN", (0, 1), (0, -1), "CENTER"),
            ("VALIGN", (0, 0), (-1, -1), "MIDDLE"),
            ("FONTSIZE", (0, 0), (-1, -1), 7.5),
        ]
        for row, item in enumerate(report.items, start=1):
            table_style.append(("BACKGROUND", (5, row), (5, row), STATUS_COLORS[item.status]))
        table.setStyle(TableStyle(table_style))

        story.append(table)
        story.append(Spacer(1, 18))

        # ---------------- SUMMARY ----------------
        counts = {status: sum(1 for i in report.items if i.status == status) for status in VerificationStatus}
        summary_data = [["Status", "Items"]] + [[status.value, str(counts[status])] for status in VerificationStatus]
        summary_table = Table(summary_data, colWidths=[60 * mm, 30 * mm])
        summary_table.setStyle(TableStyle([
            ("FONTNAME", (0, 0), (-1, -1), FONT),
            ("GRID", (0, 0), (-1, -1), 0.5, colors.grey),
            ("BACKGROUND", (0, 0), (-1, 0), colors.lightgrey),
            ("FONTSIZE", (0, 0), (-1, -1), 9),
            ("BOTTOMPADDING", (0, 0), (-1, -1), 6),
        ]))
        story.append(Paragraph("<b>SUMMARY</b>", styles["Cell"]))
        story.append(Spacer(1, 6))
        story.append(summary_table)

        doc.build(story)
        logger.info("wrote %s", path)
        return path

    @staticmethod
    def generate_regime_workbook(parameters: Sequence[str], rows: Sequence[SweepRow], path: str) -> str:
        """Regime map as an .xlsx sheet, same columns as the sweep CSV."""
        wb = Workbook()
        ws = wb.active
        ws.title = "regime_map"

        table = sweep_table(parameters, rows)
        header = table[0]
        ws.append(header)
        for cell in ws[1]:
            cell.font = Font(bold=True)
            cell.fill = PatternFill("solid", fgColor="D3D3D3")
            cell.alignment = Alignment(horizontal="center")

        numeric = set(range(len(parameters))) | {header.index(name) for name in
                                                 ("axis1_d1", "axis1_d2", "axis2_d1", "axis2_d2",
                                                  "interior_d1", "interior_d2")}
        count_column = header.index("feasible_count")
        for values in table[1:]:
            cells = [float(v) if k in numeric and v != "" else v for k, v in enumerate(values)]
            cells[count_column] = int(values[count_column])
            ws.append(cells)

        for k, name in enumerate(header, start=1):
            ws.column_dimensions[ws.cell(row=1, column=k).column_letter].width = max(12, len(name) + 2)
        ws.freeze_panes = "A2"

        wb.save(path)
        logger.info("wrote %s", path)
        return path
