# Analysis pipelines, results catalog and family search
