from .dataframe import (get_report_df, verdict_counts,
                        log_report_df_to_screen, log_report_df_to_file)
