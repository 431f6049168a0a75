from consola.comandos import ComandoConsola
from verificacion.services import SUITES


class Command(ComandoConsola):
    help = "Ejecuta una suite de propiedades y muestra los contraejemplos"
    comando = 'verify'
    requiere_entrada = False

    def agregar_opciones(self, parser):
        parser.add_argument('--suite', choices=sorted(SUITES), required=True)
        parser.add_argument('--max-n', dest='max_n', type=int, default=4, help="Vértices de la base exhaustiva (≤ 4)")
        parser.add_argument('--count', type=int, default=200, help="Casos aleatorios")
        parser.add_argument('--workers', type=int, default=1, help="Hilos")

    def opciones_del_comando(self, options) -> dict:
        return {k: options[k] for k in ('suite', 'max_n', 'count', 'workers')}
